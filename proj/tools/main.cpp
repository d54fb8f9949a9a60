#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "raneycore/coral.hpp"
#include "raneycore/numbers.hpp"
#include "raneycore/partition.hpp"
#include "raneycore/poset.hpp"
#include "raneycore/verify.hpp"

namespace {

using raneycore::CoralDiagram;
using raneycore::CoralNode;
using raneycore::Partition;

std::string partition_text(const Partition& lambda) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
        if (i > 0) out << ",";
        out << lambda.parts()[i];
    }
    out << ")";
    return out.str();
}

nlohmann::json partition_json(const Partition& lambda) {
    return nlohmann::json(lambda.parts());
}

nlohmann::json coral_node_json(const CoralNode& node) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CoralNode& child : node.children) arr.push_back(coral_node_json(child));
    return arr;
}

nlohmann::json coral_json(const CoralDiagram& d) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CoralNode& top : d.tops) arr.push_back(coral_node_json(top));
    return arr;
}

void coral_node_text(const CoralNode& node, std::ostream& out) {
    if (node.is_leaf()) {
        out << "*";
        return;
    }
    out << "(";
    for (const CoralNode& child : node.children) coral_node_text(child, out);
    out << ")";
}

std::string coral_text(const CoralDiagram& d) {
    std::ostringstream out;
    for (const CoralNode& top : d.tops) coral_node_text(top, out);
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Raney numbers, (s,t)-core partitions, and coral diagrams"};
    app.require_subcommand(1);
    int exit_code = 0;

    const auto positive = CLI::Range(1, std::numeric_limits<int>::max());
    const auto nonnegative = CLI::Range(0, std::numeric_limits<int>::max());

    // raney
    {
        auto* cmd = app.add_subcommand("raney", "Raney number R_{p,r}(k)");
        auto p = std::make_shared<int>();
        auto r = std::make_shared<int>();
        auto k = std::make_shared<int>();
        cmd->add_option("--p", *p, "star arity")->required()->check(positive);
        cmd->add_option("--r", *r, "root arity")->required()->check(nonnegative);
        cmd->add_option("--k", *k, "number of stars")->required()->check(nonnegative);
        cmd->callback([=] { std::cout << raneycore::raney(*p, *r, *k).str() << "\n"; });
    }

    // catalan
    {
        auto* cmd = app.add_subcommand("catalan", "Catalan number C_k");
        auto k = std::make_shared<int>();
        cmd->add_option("--k", *k, "index")->required()->check(nonnegative);
        cmd->callback([=] { std::cout << raneycore::catalan(*k).str() << "\n"; });
    }

    // fuss
    {
        auto* cmd = app.add_subcommand("fuss", "Fuss-Catalan number C_p(k)");
        auto p = std::make_shared<int>();
        auto k = std::make_shared<int>();
        cmd->add_option("--p", *p, "arity")->required()->check(positive);
        cmd->add_option("--k", *k, "index")->required()->check(nonnegative);
        cmd->callback([=] { std::cout << raneycore::fuss_catalan(*p, *k).str() << "\n"; });
    }

    // count-cores
    {
        auto* cmd = app.add_subcommand("count-cores", "Number of (s,t)-core partitions");
        auto s = std::make_shared<int>();
        auto t = std::make_shared<int>();
        cmd->add_option("--s", *s)->required()->check(positive);
        cmd->add_option("--t", *t)->required()->check(positive);
        cmd->callback([=] {
            std::cout << raneycore::count_order_ideals(raneycore::CorePoset(*s, *t)).str()
                      << "\n";
        });
    }

    // list-cores
    {
        auto* cmd = app.add_subcommand("list-cores", "Enumerate (s,t)-core partitions");
        auto s = std::make_shared<int>();
        auto t = std::make_shared<int>();
        auto format = std::make_shared<std::string>("text");
        cmd->add_option("--s", *s)->required()->check(positive);
        cmd->add_option("--t", *t)->required()->check(positive);
        cmd->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
        cmd->callback([=] {
            raneycore::enumerate_core_partitions(*s, *t, [&](const Partition& lambda) {
                if (*format == "json")
                    std::cout << partition_json(lambda).dump() << "\n";
                else
                    std::cout << partition_text(lambda) << "\n";
            });
        });
    }

    // count-filtered
    {
        auto* cmd = app.add_subcommand(
            "count-filtered", "Number of (s,s+1)-cores with all parts divisible by p");
        auto s = std::make_shared<int>();
        auto p = std::make_shared<int>();
        auto method = std::make_shared<std::string>("recurrence");
        auto bound = std::make_shared<int>(raneycore::kDefaultEnumerationBound);
        cmd->add_option("--s", *s)->required()->check(positive);
        cmd->add_option("--p", *p)->required()->check(positive);
        cmd->add_option("--method", *method)
            ->check(CLI::IsMember({"direct", "ideal", "recurrence"}));
        cmd->add_option("--bound", *bound, "enumeration bound")->check(positive);
        cmd->callback([=] {
            raneycore::FilterMethod m = raneycore::FilterMethod::recurrence;
            if (*method == "direct") m = raneycore::FilterMethod::direct;
            if (*method == "ideal") m = raneycore::FilterMethod::ideal_property;
            std::cout << raneycore::count_filtered_cores(*s, *p, m, *bound).str() << "\n";
        });
    }

    // coral-count
    {
        auto* cmd = app.add_subcommand("coral-count", "Number of coral diagrams of type (p,r,k)");
        auto p = std::make_shared<int>();
        auto r = std::make_shared<int>();
        auto k = std::make_shared<int>();
        cmd->add_option("--p", *p)->required()->check(positive);
        cmd->add_option("--r", *r)->required()->check(nonnegative);
        cmd->add_option("--k", *k)->required()->check(nonnegative);
        cmd->callback([=] { std::cout << raneycore::count_coral(*p, *r, *k).str() << "\n"; });
    }

    // coral-list
    {
        auto* cmd = app.add_subcommand("coral-list", "Enumerate coral diagrams of type (p,r,k)");
        auto p = std::make_shared<int>();
        auto r = std::make_shared<int>();
        auto k = std::make_shared<int>();
        auto format = std::make_shared<std::string>("text");
        cmd->add_option("--p", *p)->required()->check(positive);
        cmd->add_option("--r", *r)->required()->check(nonnegative);
        cmd->add_option("--k", *k)->required()->check(nonnegative);
        cmd->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
        cmd->callback([=] {
            raneycore::enumerate_coral(*p, *r, *k, [&](const CoralDiagram& d) {
                if (*format == "json")
                    std::cout << coral_json(d).dump() << "\n";
                else
                    std::cout << coral_text(d) << "\n";
            });
        });
    }

    // poset-dot
    {
        auto* cmd = app.add_subcommand("poset-dot", "Hasse diagram of P_(s,t) in DOT format");
        auto s = std::make_shared<int>();
        auto t = std::make_shared<int>();
        cmd->add_option("--s", *s)->required()->check(positive);
        cmd->add_option("--t", *t)->required()->check(positive);
        cmd->callback(
            [=] { std::cout << raneycore::poset_to_dot(raneycore::CorePoset(*s, *t)); });
    }

    // coral-dot
    {
        auto* cmd = app.add_subcommand("coral-dot", "One coral diagram in DOT format");
        auto p = std::make_shared<int>();
        auto r = std::make_shared<int>();
        auto k = std::make_shared<int>();
        auto index = std::make_shared<int>(0);
        cmd->add_option("--p", *p)->required()->check(positive);
        cmd->add_option("--r", *r)->required()->check(nonnegative);
        cmd->add_option("--k", *k)->required()->check(nonnegative);
        cmd->add_option("--index", *index, "position in the enumeration order")
            ->check(nonnegative);
        cmd->callback([=] {
            const auto diagrams = raneycore::all_coral(*p, *r, *k);
            raneycore::detail::check_arg(
                *index < static_cast<int>(diagrams.size()),
                "coral-dot: index " + std::to_string(*index) + " out of range (" +
                    std::to_string(diagrams.size()) + " diagrams)");
            std::cout << raneycore::coral_to_dot(diagrams[*index]);
        });
    }

    // verify
    {
        auto* cmd = app.add_subcommand(
            "verify", "Cross-check the filtered core counts against the Raney numbers");
        auto s_max = std::make_shared<int>(10);
        auto p_max = std::make_shared<int>(6);
        auto bound = std::make_shared<int>(raneycore::kDefaultEnumerationBound);
        auto format = std::make_shared<std::string>("text");
        auto with_oracles = std::make_shared<bool>(false);
        cmd->add_option("--s-max", *s_max)->check(positive);
        cmd->add_option("--p-max", *p_max)->check(positive);
        cmd->add_option("--bound", *bound, "enumeration bound")->check(positive);
        cmd->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
        cmd->add_flag("--with-oracles", *with_oracles,
                      "also check the core-count, max-size and self-conjugate formulas");
        cmd->callback([=, &exit_code] {
            const auto report = raneycore::verify_main_theorem(*s_max, *p_max, *bound);
            bool ok = report.all_agree;
            raneycore::OracleReport oracles;
            if (*with_oracles) {
                oracles = raneycore::verify_oracles(9);
                ok = ok && oracles.all_agree;
            }
            if (*format == "json") {
                nlohmann::json doc = nlohmann::json::parse(raneycore::report_to_json(report));
                if (*with_oracles)
                    doc["oracles"] =
                        nlohmann::json::parse(raneycore::oracle_report_to_json(oracles));
                std::cout << doc.dump(2) << "\n";
            } else {
                for (const auto& c : report.cases) {
                    std::cout << "s=" << c.s << " p=" << c.p << " k=" << c.k << " r=" << c.r
                              << " enumeration=" << c.count_enumeration.str()
                              << " recurrence=" << c.count_recurrence.str()
                              << " raney=" << c.count_raney.str()
                              << " rhs=" << c.rhs_conjecture.str()
                              << (c.agree ? " agree" : " DISAGREE") << "\n";
                }
                if (*with_oracles) {
                    for (const auto& c : oracles.cases) {
                        std::cout << "oracle s=" << c.s << " t=" << c.t
                                  << " cores=" << c.core_count.str() << "/"
                                  << c.core_count_formula.str()
                                  << " max=" << c.max_size.str() << "/"
                                  << c.max_size_formula.str() << " witnesses="
                                  << c.max_size_witnesses
                                  << " selfconj=" << c.self_conjugate_count.str() << "/"
                                  << c.self_conjugate_formula.str()
                                  << (c.agree ? " agree" : " DISAGREE") << "\n";
                    }
                }
                std::cout << (ok ? "all agree" : "DISAGREEMENT FOUND") << "\n";
            }
            exit_code = ok ? 0 : 1;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the diagnostic to stderr
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
