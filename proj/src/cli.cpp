#include "rblock/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rblock/errors.hpp"
#include "rblock/formulas.hpp"
#include "rblock/lattice_paths.hpp"
#include "rblock/planepartition.hpp"
#include "rblock/schur.hpp"
#include "rblock/svg.hpp"
#include "rblock/tiling.hpp"
#include "rblock/verify.hpp"

namespace rblock {

namespace {

using json = nlohmann::ordered_json;

std::vector<int> parse_int_list(const std::string& flag, const std::string& text,
                                bool allow_empty = false) {
    std::vector<int> out;
    if (text.empty()) {
        if (allow_empty) return out;
        throw invalid_input(flag + ": expected a comma-separated integer list");
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw invalid_input(flag + ": '" + item + "' is not an integer");
        }
    }
    if (out.empty() && !allow_empty)
        throw invalid_input(flag + ": expected a comma-separated integer list");
    return out;
}

json mpoly_to_json(const MPoly& p) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        json term;
        term["coeff"] = it->second.to_string();
        term["q"] = it->first.q();
        term["t"] = it->first.t();
        json xs = json::object();
        for (const auto& [idx, e] : it->first.x()) xs[std::to_string(idx)] = e;
        term["x"] = xs;
        terms.push_back(term);
    }
    return terms;
}

json triangle_to_json(const Triangle& t) {
    return json{{"x", t.x},
                {"u", t.u},
                {"pointing", t.pointing == Pointing::left ? "left" : "right"}};
}

json tiling_to_json(const Tiling& t, const TriangleSet& region) {
    json lozenges = json::array();
    for (const Lozenge& l : t.lozenges) {
        json entry;
        entry["orientation"] = to_string(l.kind());
        if (l.kind() == LozengeKind::negative)
            entry["column_from_right"] = l.column_from_right(region.right_line);
        entry["triangles"] = json::array({triangle_to_json(l.left),
                                          triangle_to_json(l.right)});
        lozenges.push_back(entry);
    }
    return lozenges;
}

json suite_to_json(const SuiteResult& r) {
    json j;
    j["suite"] = r.suite;
    j["instances"] = r.instances;
    j["failures"] = r.failures;
    if (r.first_counterexample.empty())
        j["first_counterexample"] = nullptr;
    else
        j["first_counterexample"] = r.first_counterexample;
    return j;
}

struct RegionFlags {
    std::string trap;
    std::string hex;
    std::string P;
    std::string Pprime;

    void attach(CLI::App* cmd) {
        cmd->add_option("--trap", trap, "trapezoid as height,m");
        cmd->add_option("--hex", hex, "hexagon as a,b,c");
        cmd->add_option("--P", P, "right dent labels, e.g. 1,3,5");
        cmd->add_option("--Pprime", Pprime, "left dent labels");
    }

    TriangleSet build() const {
        if (trap.empty() == hex.empty())
            throw invalid_input("give exactly one of --trap or --hex");
        if (!hex.empty()) {
            if (!P.empty() || !Pprime.empty())
                throw invalid_input("--P/--Pprime only apply to --trap regions");
            auto abc = parse_int_list("--hex", hex);
            if (abc.size() != 3) throw invalid_input("--hex needs exactly a,b,c");
            return HexagonRegion(abc[0], abc[1], abc[2]).triangles();
        }
        auto hm = parse_int_list("--trap", trap);
        if (hm.size() != 2) throw invalid_input("--trap needs exactly height,m");
        auto p = parse_int_list("--P", P, true);
        auto pp = parse_int_list("--Pprime", Pprime, true);
        return TrapezoidRegion(hm[0], hm[1], p, pp).triangles();
    }
};

BlockProfile profile_from_flag(const std::string& flag, const std::string& text) {
    return BlockProfile(parse_int_list(flag, text));
}

int report_suites(const std::vector<SuiteResult>& suites, const std::string& format,
                  std::ostream& out) {
    bool all_ok = true;
    if (format == "json") {
        json arr = json::array();
        for (const auto& s : suites) arr.push_back(suite_to_json(s));
        out << (suites.size() == 1 ? arr[0].dump(2) : arr.dump(2)) << "\n";
    } else {
        for (const auto& s : suites) {
            out << (s.ok() ? "PASS" : "FAIL") << " " << s.suite << ": "
                << s.instances << " instances, " << s.failures << " failures";
            if (!s.ok()) out << "; first counterexample: " << s.first_counterexample;
            out << "\n";
        }
    }
    for (const auto& s : suites) all_ok = all_ok && s.ok();
    return all_ok ? 0 : 1;
}

struct CliState {
    std::ostream& out;

    // count
    std::string count_r;
    std::string count_method = "formula";
    std::uint64_t count_unsafe_max = 5'000'000;

    // genfun
    std::string genfun_r;
    std::string genfun_method = "formula";
    std::string genfun_format = "text";

    // formula subcommands
    std::string f_r, f_rprime;
    int f_m = 0, f_n = 0, f_l = 0;
    int f_a = 0, f_b = 0, f_c = 0;
    bool f_q = false;

    // tilings
    RegionFlags til_region;
    std::string til_weight = "x";
    std::string til_format = "text";
    std::uint64_t til_unsafe_max = 5'000'000;
    std::string til_r, til_rprime;
    int til_m = 0, til_n = 0, til_l = 0;

    // render
    RegionFlags render_region;
    std::uint64_t render_index = 0;
    std::string render_out;

    // pp
    int pp_a = 1, pp_b = 1, pp_c = 0;
    int pp_m = 1, pp_n = 1;
    std::string pp_r;
    bool pp_volume = false;
    int pp_unsafe_max = 0;

    // schur
    std::string schur_lambda, schur_mu;
    int schur_m = 0;
    bool schur_principal = false;

    // lgv
    std::string lgv_r;

    // verify
    int v_max = 6;
    int v_range = 6;
    int v_n = 3;
    int v_M = 6;
    int v_N = 6;
    std::uint64_t v_seed = 20240901;
    int v_rounds = 200;
    std::string v_format = "json";

    void print_poly(const MPoly& p, const std::string& format) {
        if (format == "json")
            out << mpoly_to_json(p).dump(2) << "\n";
        else
            out << p.to_string() << "\n";
    }
};

PPLimits pp_limits_from(int unsafe_max) {
    PPLimits lim;
    if (unsafe_max > 0) {
        lim.max_cells = unsafe_max;
        lim.max_bound = unsafe_max;
    }
    return lim;
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"exact enumeration of block diagonally symmetric lozenge tilings"};
    app.require_subcommand(1);
    CliState st{out};

    // ---- count ----
    auto* count = app.add_subcommand(
        "count", "number of block diagonally symmetric tilings for a profile");
    count->add_option("--r", st.count_r, "block profile, e.g. 1,1,1")->required();
    count->add_option("--method", st.count_method, "formula|hexagon")
        ->check(CLI::IsMember({"formula", "hexagon"}));
    count->add_option("--unsafe-max", st.count_unsafe_max,
                      "raise the tiling enumeration guard");
    count->callback([&] {
        BlockProfile r = profile_from_flag("--r", st.count_r);
        if (st.count_method == "formula") {
            st.out << block_count_product(r).to_string() << "\n";
        } else {
            auto res = enumerate_symmetric_hexagon(r, r.sum(), r.parts(),
                                                   {st.count_unsafe_max});
            st.out << res.count << "\n";
        }
    });

    // ---- genfun ----
    auto* genfun = app.add_subcommand(
        "genfun", "(q,t) generating function of the block symmetry class");
    genfun->add_option("--r", st.genfun_r, "block profile")->required();
    genfun->add_option("--method", st.genfun_method, "formula|lgv|tilings|schur")
        ->check(CLI::IsMember({"formula", "lgv", "tilings", "schur"}));
    genfun->add_option("--format", st.genfun_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    genfun->callback([&] {
        BlockProfile r = profile_from_flag("--r", st.genfun_r);
        int m = r.sum(), n = r.parts();
        MPoly p;
        if (st.genfun_method == "formula") {
            p = block_qt_product(r);
        } else if (st.genfun_method == "lgv") {
            p = det_polymatrix(lgv_matrix(r, m, n));
        } else if (st.genfun_method == "schur") {
            for (const auto& P : right_dent_sets(r, m + n))
                p += skew_schur(partition_from_dents(P, m), {}, m);
            p = p.substitute_qt();
        } else {
            p = block_symmetric_sum(r, m, n, WeightKind::qt);
        }
        st.print_poly(p, st.genfun_format);
    });

    // ---- formula ----
    auto* formula = app.add_subcommand("formula", "closed-form evaluators");
    formula->require_subcommand(1);
    auto add_r = [&](CLI::App* cmd) {
        cmd->add_option("--r", st.f_r, "block profile")->required();
    };
    auto* f_thm1 = formula->add_subcommand("thm1", "(q,t) product for a profile");
    add_r(f_thm1);
    f_thm1->callback([&] {
        st.out << block_qt_product(profile_from_flag("--r", st.f_r)).to_string()
               << "\n";
    });
    auto* f_cor1 = formula->add_subcommand("cor1", "plain count for a profile");
    add_r(f_cor1);
    f_cor1->callback([&] {
        st.out << block_count_product(profile_from_flag("--r", st.f_r)).to_string()
               << "\n";
    });
    auto* f_thm15 = formula->add_subcommand(
        "thm15", "(q,t) product for block symmetric plane partitions");
    add_r(f_thm15);
    f_thm15->callback([&] {
        st.out << block_pp_qt_product(profile_from_flag("--r", st.f_r)).to_string()
               << "\n";
    });
    auto* f_cor3 = formula->add_subcommand(
        "cor3", "volume generating function of block symmetric plane partitions");
    add_r(f_cor3);
    f_cor3->callback([&] {
        st.out << block_pp_volume_product(profile_from_flag("--r", st.f_r)).to_string()
               << "\n";
    });
    auto* f_thm2 = formula->add_subcommand(
        "thm2", "product side of the signed enumeration identity");
    f_thm2->add_option("--r", st.f_r, "right profile (sums to m+l)")->required();
    f_thm2->add_option("--rprime", st.f_rprime, "left profile (1^l,0^{n-l})")
        ->required();
    f_thm2->add_option("--m", st.f_m, "width m")->required();
    f_thm2->add_option("--n", st.f_n, "profile length n")->required();
    f_thm2->add_option("--l", st.f_l, "number of left cells l")->required();
    f_thm2->callback([&] {
        st.out << signed_sum_product(profile_from_flag("--r", st.f_r),
                                     profile_from_flag("--rprime", st.f_rprime),
                                     st.f_m, st.f_n, st.f_l)
                      .to_string()
               << "\n";
    });
    auto* f_mac = formula->add_subcommand("macmahon", "boxed plane partition product");
    f_mac->add_option("--a", st.f_a)->required();
    f_mac->add_option("--b", st.f_b)->required();
    f_mac->add_option("--c", st.f_c)->required();
    f_mac->add_flag("--q", st.f_q, "volume generating function instead of the count");
    f_mac->callback([&] {
        if (st.f_q)
            st.out << macmahon_q(st.f_a, st.f_b, st.f_c).to_string() << "\n";
        else
            st.out << macmahon_count(st.f_a, st.f_b, st.f_c).to_string() << "\n";
    });
    auto* f_sym = formula->add_subcommand(
        "sympp", "transpose-symmetric plane partition product");
    f_sym->add_option("--m", st.f_m)->required();
    f_sym->add_option("--n", st.f_n)->required();
    f_sym->add_flag("--q", st.f_q, "half-size generating function instead of the count");
    f_sym->callback([&] {
        if (st.f_q)
            st.out << sym_pp_q(st.f_m, st.f_n).to_string() << "\n";
        else
            st.out << sym_pp_count(st.f_m, st.f_n).to_string() << "\n";
    });
    auto* f_asm = formula->add_subcommand("asm", "alternating sign matrix numbers");
    f_asm->add_option("--n", st.f_n)->required();
    f_asm->callback([&] { st.out << asm_count(st.f_n).to_string() << "\n"; });

    // ---- tilings ----
    auto* tilings = app.add_subcommand("tilings", "brute-force tiling enumeration");
    tilings->require_subcommand(1);
    auto* til_count = tilings->add_subcommand("count", "number of tilings");
    auto* til_list = tilings->add_subcommand("list", "list every tiling");
    auto* til_gen = tilings->add_subcommand("genfun", "weighted sum over tilings");
    for (CLI::App* cmd : {til_count, til_list, til_gen}) {
        st.til_region.attach(cmd);
        cmd->add_option("--unsafe-max", st.til_unsafe_max,
                        "raise the tiling enumeration guard");
    }
    til_list->add_option("--format", st.til_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    til_gen->add_option("--weight", st.til_weight, "x|qt")
        ->check(CLI::IsMember({"x", "qt"}));
    til_gen->add_option("--format", st.genfun_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    til_count->callback([&] {
        st.out << count_tilings(st.til_region.build(), {st.til_unsafe_max}) << "\n";
    });
    til_list->callback([&] {
        TriangleSet region = st.til_region.build();
        if (st.til_format == "json") {
            json arr = json::array();
            for_each_tiling(
                region, [&](const Tiling& t) { arr.push_back(tiling_to_json(t, region)); },
                {st.til_unsafe_max});
            out << arr.dump(2) << "\n";
        } else {
            std::uint64_t idx = 0;
            for_each_tiling(
                region,
                [&](const Tiling& t) {
                    st.out << "# tiling " << idx++ << "\n";
                    for (const Lozenge& l : t.lozenges) {
                        st.out << to_string(l.kind()) << " L(" << l.left.x << ","
                               << l.left.u << ") R(" << l.right.x << "," << l.right.u
                               << ")";
                        if (l.kind() == LozengeKind::negative)
                            st.out << " x" << l.column_from_right(region.right_line) + 1;
                        st.out << "\n";
                    }
                },
                {st.til_unsafe_max});
        }
    });
    til_gen->callback([&] {
        TriangleSet region = st.til_region.build();
        MPoly p = weighted_region_sum(
            region, st.til_weight == "qt" ? WeightKind::qt : WeightKind::x,
            {st.til_unsafe_max});
        st.print_poly(p, st.genfun_format);
    });
    auto* til_signed = tilings->add_subcommand(
        "signed", "signed dent-set sum for arbitrary left profiles (exploratory)");
    til_signed->add_option("--r", st.til_r, "right profile (sums to m+l)")->required();
    til_signed->add_option("--rprime", st.til_rprime, "left profile (sums to l)")
        ->required();
    til_signed->add_option("--m", st.til_m)->required();
    til_signed->add_option("--n", st.til_n)->required();
    til_signed->add_option("--l", st.til_l)->required();
    til_signed->add_option("--unsafe-max", st.til_unsafe_max);
    til_signed->callback([&] {
        MPoly p = signed_block_sum(profile_from_flag("--r", st.til_r),
                                   profile_from_flag("--rprime", st.til_rprime),
                                   st.til_m, st.til_n, st.til_l, {st.til_unsafe_max});
        st.print_poly(p, st.genfun_format);
    });

    // ---- render ----
    auto* render = app.add_subcommand("render", "emit one tiling as SVG");
    st.render_region.attach(render);
    render->add_option("--index", st.render_index, "0-based tiling index");
    render->add_option("--out", st.render_out, "output SVG path")->required();
    render->callback([&] {
        TriangleSet region = st.render_region.build();
        std::optional<Tiling> picked;
        std::uint64_t idx = 0;
        try {
            for_each_tiling(region, [&](const Tiling& t) {
                if (idx++ == st.render_index) {
                    picked = t;
                    throw size_limit_error("done");
                }
            });
        } catch (const size_limit_error&) {
            if (!picked) throw;
        }
        if (!picked)
            throw invalid_input("--index " + std::to_string(st.render_index) +
                                " out of range: region has " + std::to_string(idx) +
                                " tilings");
        emit_svg_file(*picked, region, st.render_out);
        st.out << "wrote " << st.render_out << "\n";
    });

    // ---- pp ----
    auto* pp = app.add_subcommand("pp", "boxed plane partitions");
    pp->require_subcommand(1);
    auto* pp_count = pp->add_subcommand("count", "enumerate PP^c(a x b)");
    pp_count->add_option("--a", st.pp_a)->required();
    pp_count->add_option("--b", st.pp_b)->required();
    pp_count->add_option("--c", st.pp_c)->required();
    pp_count->add_option("--unsafe-max", st.pp_unsafe_max,
                         "raise the enumeration guard");
    pp_count->callback([&] {
        std::uint64_t n = 0;
        for_each_pp(st.pp_a, st.pp_b, st.pp_c, [&](const PlanePartition&) { ++n; },
                    pp_limits_from(st.pp_unsafe_max));
        st.out << n << "\n";
    });
    auto* pp_gen = pp->add_subcommand(
        "genfun", "(q,t) generating function of block symmetric plane partitions");
    pp_gen->add_option("--m", st.pp_m)->required();
    pp_gen->add_option("--n", st.pp_n)->required();
    pp_gen->add_option("--r", st.pp_r, "block profile")->required();
    pp_gen->add_flag("--volume", st.pp_volume, "specialize t := q");
    pp_gen->add_option("--format", st.genfun_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    pp_gen->callback([&] {
        MPoly p = r_block_pp_genfun(st.pp_m, st.pp_n,
                                    profile_from_flag("--r", st.pp_r));
        if (st.pp_volume) p = p.substitute_t_to_q();
        st.print_poly(p, st.genfun_format);
    });

    // ---- schur ----
    auto* schur = app.add_subcommand("schur", "skew Schur polynomials");
    schur->require_subcommand(1);
    auto* schur_eval = schur->add_subcommand("eval", "evaluate s_{lambda/mu}");
    schur_eval->add_option("--lambda", st.schur_lambda, "outer partition")->required();
    schur_eval->add_option("--mu", st.schur_mu, "inner partition");
    schur_eval->add_option("--m", st.schur_m, "number of variables")->required();
    schur_eval->add_flag("--principal", st.schur_principal,
                         "principal specialization s_lambda(1, q, ..., q^{m-1})");
    schur_eval->add_option("--format", st.genfun_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    schur_eval->callback([&] {
        Partition lambda(parse_int_list("--lambda", st.schur_lambda, true));
        Partition mu(parse_int_list("--mu", st.schur_mu, true));
        if (st.schur_principal) {
            if (!mu.empty())
                throw invalid_input("--principal applies to straight shapes only");
            st.print_poly(principal_spec(lambda, st.schur_m), st.genfun_format);
        } else {
            st.print_poly(skew_schur(lambda, mu, st.schur_m), st.genfun_format);
        }
    });

    // ---- lgv ----
    auto* lgv = app.add_subcommand("lgv", "non-intersecting path determinants");
    lgv->require_subcommand(1);
    auto* lgv_gen = lgv->add_subcommand(
        "genfun", "determinant of the merged-endpoint path matrix");
    lgv_gen->add_option("--r", st.lgv_r, "block profile")->required();
    lgv_gen->add_option("--format", st.genfun_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    lgv_gen->callback([&] {
        BlockProfile r = profile_from_flag("--r", st.lgv_r);
        st.print_poly(det_polymatrix(lgv_matrix(r, r.sum(), r.parts())),
                      st.genfun_format);
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "exhaustive identity suites");
    verify->require_subcommand(1);
    std::vector<SuiteResult> results;
    auto add_fmt = [&](CLI::App* cmd) {
        cmd->add_option("--format", st.v_format, "json|text")
            ->check(CLI::IsMember({"json", "text"}));
    };
    struct SuiteSpec {
        const char* name;
        const char* help;
        std::function<void(CLI::App*)> options;
        std::function<std::vector<SuiteResult>()> run;
    };
    std::vector<SuiteSpec> suites = {
        {"thm1", "triple agreement: dent sum, determinant, product",
         [&](CLI::App* c) { c->add_option("--max", st.v_max, "max m+n"); },
         [&] { return std::vector{verify_thm1(st.v_max)}; }},
        {"offdiag", "all-ones profile powers of two",
         [&](CLI::App*) {},
         [&] { return std::vector{verify_offdiag(6, 4)}; }},
        {"asm", "r=(2,...,2) specialization",
         [&](CLI::App*) {},
         [&] { return std::vector{verify_asm_specialization(3, 4)}; }},
        {"thm15", "block symmetric plane partition products",
         [&](CLI::App* c) { c->add_option("--max", st.v_max, "max m+n"); },
         [&] { return std::vector{verify_block_pp(st.v_max)}; }},
        {"thm2", "signed enumeration identity",
         [&](CLI::App*) {},
         [&] { return std::vector{verify_signed_sum(3, 3, 2)}; }},
        {"af", "trapezoid weights equal skew Schur polynomials",
         [&](CLI::App* c) { c->add_option("--max", st.v_max, "max height+m"); },
         [&] { return std::vector{verify_ayyer_fischer(st.v_max)}; }},
        {"macmahon", "box product formulas",
         [&](CLI::App*) {},
         [&] { return std::vector{verify_macmahon(3, 3)}; }},
        {"lemma31", "path weight closed form vs recurrence",
         [&](CLI::App* c) { c->add_option("--range", st.v_range); },
         [&] { return std::vector{verify_lemma31(st.v_range)}; }},
        {"lemma32", "path determinant vs product",
         [&](CLI::App* c) {
             c->add_option("--n", st.v_n);
             c->add_option("--M", st.v_M);
         },
         [&] { return std::vector{verify_lemma32(st.v_n, st.v_M)}; }},
        {"split", "split-product identity",
         [&](CLI::App* c) { c->add_option("--N", st.v_N); },
         [&] { return std::vector{verify_split_product(st.v_N)}; }},
        {"pieri", "dual Pieri and skew dual Pieri identities",
         [&](CLI::App* c) { c->add_option("--max", st.v_max, "max |lambda|"); },
         [&] { return std::vector{verify_pieri(st.v_max, 3, 3)}; }},
        {"cross", "hexagon oracle vs dent-set oracle",
         [&](CLI::App* c) { c->add_option("--max", st.v_max, "max m+n"); },
         [&] { return std::vector{verify_cross_oracle(st.v_max)}; }},
        {"mpoly", "randomized ring axioms",
         [&](CLI::App* c) {
             c->add_option("--seed", st.v_seed);
             c->add_option("--rounds", st.v_rounds);
         },
         [&] { return std::vector{verify_mpoly_axioms(st.v_seed, st.v_rounds)}; }},
        {"all", "every acceptance suite",
         [&](CLI::App* c) { c->add_option("--max", st.v_max, "max m+n"); },
         [&] { return verify_all(st.v_max); }},
    };
    for (auto& entry : suites) {
        auto* cmd = verify->add_subcommand(entry.name, entry.help);
        entry.options(cmd);
        add_fmt(cmd);
        auto run = entry.run;
        cmd->callback([&results, run] { results = run(); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        int code = app.exit(e, msg, msg);
        if (code == 0) {
            out << msg.str();
            return 0;
        }
        err << msg.str();
        return 2;
    } catch (const invalid_input& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const size_limit_error& e) {
        err << "error: " << e.what() << " (override with --unsafe-max)\n";
        return 2;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }

    if (!results.empty()) return report_suites(results, st.v_format, out);
    return 0;
}

} // namespace rblock
