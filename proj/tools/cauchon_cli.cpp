#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>

#include "cauchon/diagrams.hpp"

using json = nlohmann::ordered_json;
using namespace cauchon;

namespace {

json order_json(const LusztigOrder& order, const ImplicationGraph& g) {
    json doc;
    doc["type"] = to_string(order.sys.type());
    doc["rank"] = order.sys.rank();
    doc["good_numbering"] = order.numbering.perm;
    doc["word"] = order.word;
    json roots = json::array();
    for (size_t i = 0; i < order.entries.size(); ++i) {
        const OrderEntry& e = order.entries[i];
        json r;
        r["pos"] = static_cast<int>(i) + 1;
        r["coeffs"] = std::vector<int>(e.root.data(), e.root.data() + e.root.size());
        r["column"] = e.column;
        r["box"] = e.box;
        r["height"] = e.height;
        r["lheight"] = e.lheight.str();
        r["assoc_simple"] = e.assoc_simple;
        roots.push_back(std::move(r));
    }
    doc["roots"] = std::move(roots);
    json imps = json::array();
    for (const Implication& im : g.all()) {
        json o;
        if (im.kind == Implication::Kind::Arrow) {
            o["kind"] = "arrow";
            o["src"] = im.src;
            o["dst"] = im.dst();
        } else {
            o["kind"] = "choice";
            o["src"] = im.src;
            o["alts"] = im.alts;
        }
        imps.push_back(std::move(o));
    }
    doc["implications"] = std::move(imps);
    return doc;
}

std::string coeff_str(const Root& r) {
    std::string s = "(";
    for (int i = 0; i < r.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(r(i));
    }
    return s + ")";
}

void print_roots_text(const LusztigOrder& order) {
    std::cout << "type " << to_string(order.sys.type()) << ", " << order.size()
              << " positive roots\n";
    for (size_t i = 0; i < order.entries.size(); ++i) {
        const OrderEntry& e = order.entries[i];
        std::cout << "  " << i + 1 << "\t" << coeff_str(e.root) << "\tcol "
                  << e.column << " box " << e.box << "\th " << e.height << "\th' "
                  << e.lheight.str() << "\ts" << e.assoc_simple << "\n";
    }
}

void print_implications_text(const ImplicationGraph& g) {
    for (const Implication& im : g.all()) {
        if (im.kind == Implication::Kind::Arrow) {
            std::cout << "  " << im.src << " => " << im.dst() << "\n";
        } else {
            std::cout << "  " << im.src << " => one of {";
            for (size_t i = 0; i < im.alts.size(); ++i)
                std::cout << (i ? "," : "") << im.alts[i];
            std::cout << "}\n";
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cauchon diagrams of finite root systems"};
    app.require_subcommand(1);

    std::string type_str;
    std::string format = "text";
    uint64_t limit = 10000000;

    auto add_common = [&](CLI::App* sub, bool with_format = true) {
        sub->add_option("type", type_str, "Lie type, e.g. A3, E8")->required();
        if (with_format)
            sub->add_option("--format", format, "output format")
                ->check(CLI::IsMember({"text", "json", "dot"}));
    };

    CLI::App* roots = app.add_subcommand("roots", "positive roots in Lusztig order");
    add_common(roots);
    CLI::App* word = app.add_subcommand("word", "canonical reduced word of w0");
    add_common(word);
    CLI::App* planes = app.add_subcommand("planes", "admissible planes");
    add_common(planes);
    CLI::App* impl = app.add_subcommand("implications", "implication system");
    add_common(impl);
    CLI::App* count = app.add_subcommand("count", "diagram counts per column and total");
    add_common(count);
    bool per_start = false;
    int column = 0;
    count->add_flag("--per-start", per_start, "bucket one column's count by largest position");
    count->add_option("--column", column, "column for --per-start");
    CLI::App* enumerate = app.add_subcommand("enumerate", "list all diagrams");
    add_common(enumerate);
    enumerate->add_option("--limit", limit, "maximum number of diagrams");
    CLI::App* verify = app.add_subcommand("verify", "check counts and the Weyl bijection");
    add_common(verify, false);
    bool bijection = false;
    verify->add_flag("--bijection", bijection, "force the full bijection check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        LieType type = parse_type(type_str);
        LusztigOrder order = canonical_order(type);
        ImplicationGraph graph = derive_all(order);

        if (roots->parsed()) {
            if (format == "json")
                std::cout << order_json(order, graph).dump(2) << "\n";
            else
                print_roots_text(order);
        } else if (word->parsed()) {
            if (format == "json") {
                json doc;
                doc["type"] = to_string(type);
                doc["word"] = order.word;
                std::cout << doc.dump(2) << "\n";
            } else {
                for (size_t i = 0; i < order.word.size(); ++i)
                    std::cout << (i ? " " : "") << order.word[i];
                std::cout << "\n";
            }
        } else if (planes->parsed()) {
            auto ps = enumerate_admissible_planes(order);
            if (format == "json") {
                json arr = json::array();
                for (const AdmissiblePlane& p : ps) {
                    json o;
                    o["type"] = plane_type_name(p.ptype);
                    o["column"] = p.column;
                    o["members"] = p.members;
                    if (p.beta_ex_pos != -1) o["beta_ex"] = p.beta_ex_pos;
                    if (p.alpha_pos != -1) o["alpha"] = p.alpha_pos;
                    arr.push_back(std::move(o));
                }
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const AdmissiblePlane& p : ps) {
                    std::cout << "  " << plane_type_name(p.ptype) << " col " << p.column
                              << " members {";
                    for (size_t i = 0; i < p.members.size(); ++i)
                        std::cout << (i ? "," : "") << p.members[i];
                    std::cout << "}\n";
                }
            }
        } else if (impl->parsed()) {
            if (format == "json")
                std::cout << order_json(order, graph).dump(2) << "\n";
            else if (format == "dot")
                std::cout << to_dot(order, graph);
            else
                print_implications_text(graph);
        } else if (count->parsed() && per_start) {
            if (column < 1 || column > order.sys.rank()) {
                std::cerr << "error: --per-start needs --column in 1.." << order.sys.rank()
                          << "\n";
                return 2;
            }
            std::map<int, BigInt> buckets = per_start_counts(order, graph, column);
            BigInt total = 0;
            if (format == "json") {
                json doc;
                doc["type"] = to_string(type);
                doc["column"] = column;
                json rows = json::object();
                for (const auto& [start, cnt] : buckets) {
                    rows[start == 0 ? "none" : std::to_string(start)] = cnt.str();
                    total += cnt;
                }
                doc["buckets"] = std::move(rows);
                doc["total"] = total.str();
                std::cout << doc.dump(2) << "\n";
            } else {
                for (const auto& [start, cnt] : buckets) {
                    if (start == 0)
                        std::cout << "  none: " << cnt.str() << "\n";
                    else
                        std::cout << "  " << start << ": " << cnt.str() << "\n";
                    total += cnt;
                }
                std::cout << "  total: " << total.str() << "\n";
            }
        } else if (count->parsed()) {
            BigInt total = count_all(order, graph);
            if (format == "json") {
                json doc;
                doc["type"] = to_string(type);
                json cols = json::array();
                for (int j = 1; j <= order.sys.rank(); ++j)
                    cols.push_back(count_column(order, graph, j).str());
                doc["per_column"] = std::move(cols);
                doc["total"] = total.str();
                doc["weyl_order"] = weyl_order(type).str();
                std::cout << doc.dump(2) << "\n";
            } else {
                for (int j = 1; j <= order.sys.rank(); ++j)
                    std::cout << "  column " << j << ": "
                              << count_column(order, graph, j).str() << "\n";
                std::cout << "  total: " << total.str() << " (|W| = "
                          << weyl_order(type).str() << ")\n";
            }
        } else if (enumerate->parsed()) {
            std::vector<Diagram> all = enumerate_all(order, graph, limit);
            if (format == "json") {
                json arr = json::array();
                for (const Diagram& d : all) arr.push_back(d);
                std::cout << arr.dump() << "\n";
            } else {
                for (const Diagram& d : all) {
                    std::cout << "  {";
                    for (size_t i = 0; i < d.size(); ++i)
                        std::cout << (i ? "," : "") << d[i];
                    std::cout << "}\n";
                }
                std::cout << "  " << all.size() << " diagrams\n";
            }
        } else if (verify->parsed()) {
            BigInt total = count_all(order, graph);
            BigInt w = weyl_order(type);
            bool count_ok = total == w;
            std::cout << "count: " << total.str() << " vs |W| " << w.str() << " -> "
                      << (count_ok ? "ok" : "MISMATCH") << "\n";
            bool bij_ok = true;
            if (bijection || w <= 100000) {
                BijectionReport rep = verify_bijection(order, graph, limit);
                bij_ok = rep.ok();
                std::cout << "bijection: " << rep.diagram_count << " diagrams, "
                          << (rep.all_reduced ? "all reduced" : "NON-REDUCED WORDS") << ", "
                          << (rep.all_distinct ? "all distinct" : "COLLISIONS") << " -> "
                          << (bij_ok ? "ok" : "MISMATCH") << "\n";
            } else {
                std::cout << "bijection: skipped (|W| above enumeration limit)\n";
            }
            return count_ok && bij_ok ? 0 : 1;
        }
    } catch (const RankError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
