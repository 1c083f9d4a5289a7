// wfact: exact factorization counts, relative generating sets, and
// verification suites for reflection groups at desk scale.

#include "wfact/cutjoin.hpp"
#include "wfact/forms.hpp"
#include "wfact/gram.hpp"
#include "wfact/lattice.hpp"
#include "wfact/parabolic.hpp"
#include "wfact/rgs.hpp"
#include "wfact/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using Json = nlohmann::ordered_json;
using namespace wfact;

namespace {

std::string format_flag = "json";

void print_rows(const std::string& command, const std::vector<Json>& rows) {
    if (format_flag == "tsv") {
        if (rows.empty()) return;
        std::string header, line;
        for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
            if (!header.empty()) header += '\t';
            header += it.key();
        }
        std::cout << header << '\n';
        for (const auto& row : rows) {
            line.clear();
            for (auto it = row.begin(); it != row.end(); ++it) {
                if (!line.empty()) line += '\t';
                if (it->is_null())
                    ;
                else if (it->is_string())
                    line += it->get<std::string>();
                else
                    line += it->dump();
            }
            std::cout << line << '\n';
        }
        return;
    }
    Json out;
    out["command"] = command;
    out["rows"] = rows;
    std::cout << out.dump(2) << '\n';
}

GroupSpec parse_family(const std::string& text) {
    long m, p, n;
    if (sscanf(text.c_str(), "%ld,%ld,%ld", &m, &p, &n) != 3)
        throw CLI::ValidationError("--family expects m,p,n");
    GroupSpec spec{m, p, n};
    if (!spec.valid())
        throw CLI::ValidationError("invalid family parameters");
    return spec;
}

Partition parse_lambda(const std::string& text) {
    Partition lambda;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        lambda.push_back(std::stol(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    std::sort(lambda.rbegin(), lambda.rend());
    if (lambda.empty() || lambda.back() < 1)
        throw CLI::ValidationError("--lambda expects positive parts");
    return lambda;
}

RootDatum resolve_preset(const std::string& name, bool stretch) {
    if (name == "F4" && !stretch)
        throw CLI::ValidationError("preset F4 requires --stretch");
    return preset_datum(name);
}

std::string reflection_text(const Reflection& r) {
    if (r.diagonal)
        return "[id;" + std::to_string(r.k) + "e" + std::to_string(r.i) + "]";
    return "[(" + std::to_string(r.i) + " " + std::to_string(r.j) + ");" +
           std::to_string(r.k) + "]";
}

const char* graph_name(RelGraphClass g) {
    switch (g) {
        case RelGraphClass::Tree: return "tree";
        case RelGraphClass::RootedTree: return "rooted-tree";
        case RelGraphClass::Unicycle: return "unicycle";
        default: return "none";
    }
}

Json row_json(const VerificationRow& r) {
    Json row;
    row["group"] = r.group_id;
    row["representative"] = r.representative;
    row["case_tag"] = r.case_tag;
    row["lr"] = r.lr;
    row["ltr"] = r.ltr;
    row["fred_bruteforce"] = r.fred_bruteforce.get_str();
    row["fred_formula"] =
        r.fred_formula ? Json(r.fred_formula->get_str()) : Json(nullptr);
    row["ffull_bruteforce"] = r.ffull_bruteforce.get_str();
    row["ffull_prop_formula"] = r.ffull_prop_formula
                                    ? Json(r.ffull_prop_formula->get_str())
                                    : Json(nullptr);
    row["main_thm_rhs"] =
        r.main_thm_rhs ? Json(r.main_thm_rhs->get_str()) : Json(nullptr);
    row["weyl_rhs"] = r.weyl_rhs ? Json(r.weyl_rhs->get_str()) : Json(nullptr);
    row["rgs_count_search"] = r.rgs_count_search.get_str();
    row["rgs_count_formula"] = r.rgs_count_formula
                                   ? Json(r.rgs_count_formula->get_str())
                                   : Json(nullptr);
    row["match"] = r.match;
    return row;
}

struct Addressing {
    std::string family, preset, element_json;
    int element_id = 0;
    bool stretch = false;

    bool is_preset() const { return !preset.empty(); }
    void validate() const {
        if (!family.empty() && !preset.empty())
            throw CLI::ValidationError(
                "mixed addressing: use --family or --preset, not both");
        if (family.empty() && preset.empty())
            throw CLI::ValidationError("one of --family or --preset required");
        if (is_preset() && !element_json.empty())
            throw CLI::ValidationError(
                "mixed addressing: presets take --element-id");
        if (!is_preset() && element_id != 0)
            throw CLI::ValidationError(
                "mixed addressing: families take --element");
    }
};

void add_addressing(CLI::App* cmd, Addressing& addr, bool with_element) {
    cmd->add_option("--family", addr.family, "wreath family m,p,n");
    cmd->add_option("--preset", addr.preset, "real orbit group preset");
    cmd->add_flag("--stretch", addr.stretch, "enable expensive presets");
    if (with_element) {
        cmd->add_option("--element", addr.element_json,
                        "element JSON {\"perm\":[...],\"colors\":[...]}");
        cmd->add_option("--element-id", addr.element_id,
                        "element id (presets)");
    }
}

int cmd_group_info(const Addressing& addr) {
    Json row;
    if (addr.is_preset()) {
        auto og = build_orbit_group(resolve_preset(addr.preset, addr.stretch));
        row["group"] = og.name;
        row["order"] = std::to_string(og.fg.order);
        row["rank"] = og.rank;
        row["reflections"] = og.fg.nrefl();
        row["positive_roots"] = static_cast<long>(og.positive_roots.size());
        row["coxeter_number"] = og.coxeter_number;
        row["crystallographic"] = og.crystallographic;
        if (og.crystallographic) {
            auto cd = cartan_and_connection_index(og);
            row["connection_index"] =
                cd.has_index ? Json(cd.connection_index.get_str()) : Json(nullptr);
        }
    } else {
        GroupSpec spec = parse_family(addr.family);
        row["group"] = "G(" + std::to_string(spec.m) + "," +
                       std::to_string(spec.p) + "," + std::to_string(spec.n) +
                       ")";
        row["order"] = spec.order().get_str();
        row["rank"] = spec.rank();
        row["reflections"] =
            static_cast<long>(reflections_of(spec).size());
        row["well_generated"] = spec.well_generated();
    }
    print_rows("group info", {row});
    return 0;
}

int cmd_count(const Addressing& addr, bool reduced) {
    Json row;
    if (addr.is_preset()) {
        auto og = build_orbit_group(resolve_preset(addr.preset, addr.stretch));
        if (addr.element_id < 0 || addr.element_id >= og.fg.order)
            throw CLI::ValidationError("element id out of range");
        auto lr = reflection_length_table(og.fg);
        auto lat = enumerate_lattice(og.fg);
        int e = addr.element_id;
        row["group"] = og.name;
        row["element"] = "#" + std::to_string(e);
        if (reduced) {
            row["lr"] = lr[e];
            row["count"] =
                count_tuples(og.fg, lat.subs[lat.top], e, lr[e]).get_str();
        } else {
            auto ff = first_full(lat, e);
            row["ltr"] = ff.ltr;
            row["count"] = ff.value.get_str();
        }
    } else {
        GroupSpec spec = parse_family(addr.family);
        auto wg = build_wreath_group(spec);
        WreathElement x = addr.element_json.empty()
                              ? wreath_identity(spec)
                              : element_from_json(addr.element_json, spec);
        int e = wg.id_of(x);
        auto lr = reflection_length_table(wg.fg);
        auto lat = enumerate_lattice(wg.fg);
        row["group"] = "G(" + std::to_string(spec.m) + "," +
                       std::to_string(spec.p) + "," + std::to_string(spec.n) +
                       ")";
        row["element"] = element_to_json(x);
        if (reduced) {
            row["lr"] = lr[e];
            row["count"] =
                count_tuples(wg.fg, lat.subs[lat.top], e, lr[e]).get_str();
        } else {
            auto ff = first_full(lat, e);
            row["ltr"] = ff.ltr;
            row["count"] = ff.value.get_str();
        }
    }
    print_rows(reduced ? "count reduced" : "count full", {row});
    return 0;
}

int cmd_rgs(const Addressing& addr, bool list) {
    std::vector<Json> rows;
    if (addr.is_preset()) {
        auto og = build_orbit_group(resolve_preset(addr.preset, addr.stretch));
        if (addr.element_id < 0 || addr.element_id >= og.fg.order)
            throw CLI::ValidationError("element id out of range");
        auto lr = reflection_length_table(og.fg);
        int e = addr.element_id;
        auto fact = canonical_reduced_factorization(og.fg, lr, e);
        auto sets = enumerate_rgs_sets(og.fg, fact, og.rank - lr[e]);
        if (list) {
            for (size_t i = 0; i < sets.size(); ++i) {
                Json row;
                row["index"] = static_cast<long>(i);
                row["reflections"] = sets[i];
                rows.push_back(std::move(row));
            }
        } else {
            Json row;
            row["group"] = og.name;
            row["element"] = "#" + std::to_string(e);
            row["lr"] = lr[e];
            row["size"] = og.rank - lr[e];
            row["count"] = std::to_string(sets.size());
            rows.push_back(std::move(row));
        }
    } else {
        GroupSpec spec = parse_family(addr.family);
        if (!spec.well_generated())
            throw CLI::ValidationError("family is not well generated");
        auto wg = build_wreath_group(spec);
        WreathElement x = addr.element_json.empty()
                              ? wreath_identity(spec)
                              : element_from_json(addr.element_json, spec);
        int e = wg.id_of(x);
        auto lr = reflection_length_table(wg.fg);
        auto recs = enumerate_rgs(wg, e, lr);
        if (list) {
            for (size_t i = 0; i < recs.size(); ++i) {
                Json row;
                row["index"] = static_cast<long>(i);
                std::string text;
                for (int t : recs[i].reflections) {
                    if (!text.empty()) text += ' ';
                    text += reflection_text(wg.refl_meta[t]);
                }
                row["reflections"] = text;
                row["graph"] = graph_name(recs[i].graph);
                row["grammian_key"] = recs[i].grammian_key;
                rows.push_back(std::move(row));
            }
        } else {
            auto cls = classify_pqc(x, spec);
            Json row;
            row["group"] = "G(" + std::to_string(spec.m) + "," +
                           std::to_string(spec.p) + "," +
                           std::to_string(spec.n) + ")";
            row["element"] = element_to_json(x);
            row["lr"] = lr[e];
            row["size"] = spec.rank() - lr[e];
            row["count"] = std::to_string(recs.size());
            row["count_formula"] = cls.tag == PqcCase::NotPqc
                                       ? Json(nullptr)
                                       : Json(count_rgs_formula(spec, cls).get_str());
            rows.push_back(std::move(row));
        }
    }
    print_rows(list ? "rgs list" : "rgs count", rows);
    return 0;
}

int cmd_hurwitz(int genus, const std::string& lambda_text) {
    Partition lambda = parse_lambda(lambda_text);
    Rat value = hurwitz_number(genus, lambda);
    Json row;
    row["genus"] = genus;
    std::string parts;
    for (long p : lambda) {
        if (!parts.empty()) parts += ',';
        parts += std::to_string(p);
    }
    row["lambda"] = parts;
    row["value"] = value.get_str();
    print_rows("hurwitz", {row});
    return 0;
}

int cmd_verify_main(const Addressing& addr, bool all_classes) {
    std::vector<VerificationRow> table;
    if (addr.is_preset())
        table = verify_preset(resolve_preset(addr.preset, addr.stretch),
                              all_classes);
    else
        table = verify_family(parse_family(addr.family), all_classes);
    std::vector<Json> rows;
    bool ok = true;
    for (const auto& r : table) {
        ok = ok && r.match;
        rows.push_back(row_json(r));
    }
    print_rows("verify main", rows);
    return ok ? 0 : 1;
}

int cmd_verify_cutjoin(const Addressing& addr) {
    auto og = build_orbit_group(resolve_preset(addr.preset, addr.stretch));
    auto lr = reflection_length_table(og.fg);
    auto lat = enumerate_lattice(og.fg);
    std::vector<Json> rows;
    bool ok = true;
    for (int e : conjugacy_class_representatives(og.fg)) {
        auto ff = first_full(lat, e);
        if (ff.ltr != 2 * og.rank - lr[e]) continue; // not pqc
        auto rep = cutjoin_rhs(og, lat, lr, e);
        Json row;
        row["group"] = og.name;
        row["representative"] = "#" + std::to_string(e);
        row["lr"] = lr[e];
        row["ltr"] = ff.ltr;
        row["ffull"] = ff.value.get_str();
        row["cutjoin_rhs"] = rep.value.get_str();
        row["first_terms"] = rep.first_terms;
        row["second_terms"] = rep.second_terms;
        bool match = rep.value == ff.value && rep.pqc_assertion;
        if (og.crystallographic) {
            auto rec = verify_rgs_recurrence(og, lat, lr, e);
            row["recurrence_lhs"] = rec.lhs.get_str();
            row["recurrence_rhs"] = rec.rhs.get_str();
            match = match && rec.ok;
        } else {
            row["recurrence_lhs"] = nullptr;
            row["recurrence_rhs"] = nullptr;
        }
        row["match"] = match;
        ok = ok && match;
        rows.push_back(std::move(row));
    }
    print_rows("verify cutjoin", rows);
    return ok ? 0 : 1;
}

int cmd_verify_identities(long max_m, int max_s) {
    std::vector<Json> rows;
    bool ok = true;
    for (long m = 2; m <= max_m; ++m) {
        auto rep = primitive_root_identities(m);
        Json row;
        row["kind"] = "root-identity";
        row["m"] = m;
        row["sum_one_minus"] = rep.sum_one_minus.get_str();
        row["sum_two_minus"] = rep.sum_two_minus.get_str();
        row["float_err_one"] = rep.float_err_one;
        row["float_err_two"] = rep.float_err_two;
        row["ok"] = rep.ok;
        ok = ok && rep.ok;
        rows.push_back(std::move(row));
    }
    for (int s = 1; s <= max_s; ++s) {
        auto h = chebyshev_helpers(s);
        bool good = h.a1 == Rat(2 * s + 1) &&
                    h.a_deriv1 == frac(Int(s) * (s + 1) * (2 * s + 1), 3) &&
                    h.b1 == Rat(4 * s) &&
                    h.b_deriv1 == frac(2 * Int(s) * (2 * Int(s) * s + 1), 3);
        Json row;
        row["kind"] = "chebyshev";
        row["s"] = s;
        row["a1"] = h.a1.get_str();
        row["a_deriv1"] = h.a_deriv1.get_str();
        row["b1"] = h.b1.get_str();
        row["b_deriv1"] = h.b_deriv1.get_str();
        row["ok"] = good;
        ok = ok && good;
        rows.push_back(std::move(row));
    }
    print_rows("verify identities", rows);
    return ok ? 0 : 1;
}

int cmd_poset(const Addressing& addr, const std::string& dot_path) {
    auto og = build_orbit_group(resolve_preset(addr.preset, addr.stretch));
    auto lr = reflection_length_table(og.fg);
    auto lat = enumerate_lattice(og.fg);
    auto poset = prefix_poset(og, lat, lr);
    auto ff = first_full(lat, og.fg.identity);
    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw CLI::ValidationError("cannot write " + dot_path);
        out << poset_dot(poset);
    }
    Json row;
    row["group"] = og.name;
    row["nodes"] = static_cast<long>(poset.nodes.size());
    row["covers"] = static_cast<long>(poset.covers.size());
    row["maximal_chains"] = poset.maximal_chains.get_str();
    row["ffull_id"] = ff.value.get_str();
    row["match"] = poset.maximal_chains == ff.value;
    print_rows("poset", {row});
    return poset.maximal_chains == ff.value ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hurwitz-style factorization counts for reflection groups"};
    app.require_subcommand(1);
    app.add_option("--format", format_flag, "json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));

    Addressing addr;

    auto* group = app.add_subcommand("group", "group data");
    auto* info = group->add_subcommand("info", "order, rank, reflections");
    add_addressing(info, addr, false);

    auto* count = app.add_subcommand("count", "factorization counts");
    auto* reduced = count->add_subcommand("reduced", "reduced count at lR");
    auto* full = count->add_subcommand("full", "minimum-length full count");
    add_addressing(reduced, addr, true);
    add_addressing(full, addr, true);

    auto* rgs = app.add_subcommand("rgs", "relative generating sets");
    auto* rgs_count = rgs->add_subcommand("count", "cardinality");
    auto* rgs_list = rgs->add_subcommand("list", "full listing");
    add_addressing(rgs_count, addr, true);
    add_addressing(rgs_list, addr, true);

    int genus = 0;
    std::string lambda_text;
    auto* hurwitz = app.add_subcommand("hurwitz", "classical Hurwitz numbers");
    hurwitz->add_option("--genus", genus, "0 or 1");
    hurwitz->add_option("--lambda", lambda_text, "cycle type a,b,c")
        ->required();

    bool all_classes = false;
    long max_m = 50;
    int max_s = 50;
    auto* verify = app.add_subcommand("verify", "verification suites");
    auto* vmain = verify->add_subcommand("main", "main formula matrix");
    add_addressing(vmain, addr, false);
    vmain->add_flag("--all-classes", all_classes, "every pqc class");
    auto* vcj = verify->add_subcommand("cutjoin", "cut-and-join recursion");
    add_addressing(vcj, addr, false);
    auto* vid = verify->add_subcommand("identities", "appendix identities");
    vid->add_option("--max-m", max_m, "largest conductor");
    vid->add_option("--max-s", max_s, "largest Chebyshev index");

    std::string dot_path;
    auto* poset = app.add_subcommand("poset", "prefix-pair poset");
    add_addressing(poset, addr, false);
    poset->add_option("--dot", dot_path, "write DOT file");

    // allow the global --format after a subcommand
    auto enable_fallthrough = [](auto&& self, CLI::App* cmd) -> void {
        for (CLI::App* sub : cmd->get_subcommands({})) {
            sub->fallthrough();
            self(self, sub);
        }
    };
    enable_fallthrough(enable_fallthrough, &app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (info->parsed()) {
            addr.validate();
            return cmd_group_info(addr);
        }
        if (reduced->parsed() || full->parsed()) {
            addr.validate();
            return cmd_count(addr, reduced->parsed());
        }
        if (rgs_count->parsed() || rgs_list->parsed()) {
            addr.validate();
            return cmd_rgs(addr, rgs_list->parsed());
        }
        if (hurwitz->parsed()) return cmd_hurwitz(genus, lambda_text);
        if (vmain->parsed()) {
            addr.validate();
            return cmd_verify_main(addr, all_classes);
        }
        if (vcj->parsed()) {
            if (addr.preset.empty())
                throw CLI::ValidationError("verify cutjoin needs --preset");
            return cmd_verify_cutjoin(addr);
        }
        if (vid->parsed()) return cmd_verify_identities(max_m, max_s);
        if (poset->parsed()) {
            if (addr.preset.empty())
                throw CLI::ValidationError("poset needs --preset");
            return cmd_poset(addr, dot_path);
        }
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::string what = e.what();
        if (what.find("budget exceeded") != std::string::npos)
            std::cerr << "error: budget exceeded (" << what << ")\n";
        else
            std::cerr << "error: " << what << '\n';
        return 2;
    }
}
