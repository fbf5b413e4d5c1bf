#include "hopflab/cli.hpp"

#include "hopflab/builders.hpp"
#include "hopflab/stable.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hopflab {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0)
        .count();
}

std::string dims_string(const std::vector<size_t>& dims) {
    std::string s = "[";
    for (size_t i = 0; i < dims.size(); ++i)
        s += (i ? "," : "") + std::to_string(dims[i]);
    return s + "]";
}

// shared state threaded through the pipeline stages
struct Ctx {
    explicit Ctx(Report& r, uint64_t s) : rep(r), seed(s) {}
    Report& rep;
    uint64_t seed = 0;
    HopfObject obj;
    std::optional<TransmutedBraidedGroup> t;
    std::optional<DualTransmuted> dual;
    std::optional<std::vector<SimpleModule>> irr;

    bool axioms_ok = false;
    bool qt_ok = false;
    bool factorizable = false;
    bool semisimple = false;
    bool cosemisimple = false;
    bool split = false;
    std::string gate_reason;  // first hypothesis that failed
};

bool stage_load(Ctx& c, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        c.rep.add_fail("file.open", "input file is readable",
                       "cannot open " + path);
        return false;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    c.rep.set_input(path, buf.str());
    try {
        c.obj = hopfspec_from_string(buf.str(), /*validate=*/false);
    } catch (const ParseError& e) {
        c.rep.add_fail("file.parse", "input file parses", e.what());
        return false;
    }
    c.rep.add_pass("file.parse", "input file parses");
    return true;
}

void stage_axioms(Ctx& c) {
    auto t0 = clock_type::now();
    const CheckReport hr = check_hopf(c.obj.H);
    c.rep.add_checks("", hr, ms_since(t0));
    c.axioms_ok = hr.ok();
    if (!c.obj.R) {
        c.rep.add_skip("qt", "quasi-triangular axioms",
                       "no R-matrix in the input");
        return;
    }
    t0 = clock_type::now();
    const CheckReport qr = check_qt(c.obj.H, *c.obj.R);
    c.rep.add_checks("", qr, ms_since(t0));
    c.qt_ok = c.axioms_ok && qr.ok();
}

void stage_factorizability(Ctx& c) {
    if (!c.qt_ok) {
        c.rep.add_skip("factorizable", "Drinfeld map rank",
                       "quasi-triangular axioms not established");
        return;
    }
    auto t0 = clock_type::now();
    const Mat d = drinfeld_map(c.obj.H, *c.obj.R);
    const size_t rk = rank(d);
    const size_t n = c.obj.H.dim();
    c.factorizable = rk == n;
    c.rep.add_info("factorizable",
                   "Drinfeld map bijective (rank " + std::to_string(rk) +
                       " of " + std::to_string(n) + ")",
                   c.factorizable);
    const size_t prk = rank(phi(c.obj.H, *c.obj.R));
    if (prk == rk)
        c.rep.add_pass("phi.rank_matches_drinfeld",
                       "rank(Phi) = rank(Drinfeld map) = " +
                           std::to_string(prk),
                       ms_since(t0));
    else
        c.rep.add_fail("phi.rank_matches_drinfeld",
                       "rank(Phi) = rank(Drinfeld map)",
                       std::to_string(prk) + " vs " + std::to_string(rk));
}

bool stage_transmute(Ctx& c) {
    if (!c.qt_ok) {
        c.rep.add_skip("hr", "transmuted braided group",
                       "quasi-triangular axioms not established");
        return false;
    }
    auto t0 = clock_type::now();
    try {
        CheckReport tr;
        c.t = transmute(c.obj.H, *c.obj.R, &tr);
        c.rep.add_checks("", tr, ms_since(t0));
    } catch (const BraidedAxiomFailure& e) {
        c.rep.add_fail("hr.construction", "transmutation verifies", e.what());
        return false;
    }
    t0 = clock_type::now();
    try {
        CheckReport dr;
        c.dual = dual_transmute(c.obj.H, *c.obj.R, &dr);
        c.rep.add_checks("", dr, ms_since(t0));
    } catch (const BraidedAxiomFailure& e) {
        c.rep.add_fail("hrdual.construction", "dual transmutation verifies",
                       e.what());
        return false;
    }
    t0 = clock_type::now();
    const Mat p = phi(c.obj.H, *c.obj.R);
    c.rep.add_checks("", check_phi(c.obj.H, *c.t, *c.dual, p), ms_since(t0));
    return true;
}

// establishes the semisimplicity/splitness hypotheses of the structure
// theorems; on failure fills gate_reason
void stage_hypotheses(Ctx& c) {
    if (!c.qt_ok) {
        c.gate_reason = "quasi-triangular axioms not established";
        return;
    }
    try {
        c.semisimple = jacobson_radical(c.obj.H.alg).dim() == 0;
    } catch (const UnsupportedCharacteristic& e) {
        c.gate_reason = std::string("radical not certifiable: ") + e.what();
        return;
    }
    c.rep.add_info("hypothesis.semisimple", "H is semisimple", c.semisimple);
    if (!c.semisimple) {
        c.gate_reason = "H is not semisimple";
        return;
    }
    if (!c.t) {
        c.gate_reason = "transmutation unavailable";
        return;
    }
    try {
        c.cosemisimple =
            jacobson_radical(dual_algebra(c.t->coalgebra)).dim() == 0;
    } catch (const UnsupportedCharacteristic& e) {
        c.gate_reason = std::string("coradical not certifiable: ") + e.what();
        return;
    }
    c.rep.add_info("hypothesis.cosemisimple", "H_R is cosemisimple",
                   c.cosemisimple);
    if (!c.cosemisimple) {
        c.gate_reason = "H_R is not cosemisimple";
        return;
    }
    try {
        c.irr = simple_modules(c.obj.H.alg, c.seed);
        c.split = true;
        std::vector<size_t> dims;
        for (const auto& m : *c.irr) dims.push_back(m.rep.dim);
        c.rep.add_pass("irr.dims",
                       "Irr(H) dimensions " + dims_string(dims));
    } catch (const NonSplitBlock& e) {
        c.gate_reason = std::string("non-split component: ") + e.what();
        return;
    } catch (const FactorizationIncomplete& e) {
        c.gate_reason = e.what();
        return;
    }
    if (!c.factorizable) {
        c.gate_reason = "(H,R) is not factorizable";
        return;
    }
}

void stage_decompose(Ctx& c) {
    if (!c.gate_reason.empty()) {
        c.rep.add_skip("decompose", "structure of H as a Yetter-Drinfeld module",
                       c.gate_reason);
        return;
    }
    auto t0 = clock_type::now();
    const HDecomposition dec =
        decompose_h_as_yd(c.obj.H, *c.obj.R, *c.t, c.seed);
    std::vector<size_t> sdims;
    for (const auto& s : dec.subcoalgebras) sdims.push_back(s.dim());
    c.rep.add_pass("hr.simple_subcoalgebras",
                   "simple subcoalgebras of H_R have dimensions " +
                       dims_string(sdims),
                   ms_since(t0));
    for (const auto& s : dec.summands) {
        std::ostringstream line;
        line << "dim D_W = " << s.d_w.dim() << " = (dim W)^2 for dim W = "
             << dec.irr[s.w_index].rep.dim << "; simple subcoalgebra #"
             << s.match << (s.h_stable ? "; H-stable" : "; NOT H-stable");
        c.rep.add_info("dw.table.w" + std::to_string(s.w_index), line.str(),
                       s.h_stable && s.d_w.dim() ==
                           dec.irr[s.w_index].rep.dim *
                               dec.irr[s.w_index].rep.dim);
    }
    c.rep.add_checks("", dec.checks);
}

void stage_classify(Ctx& c, bool emit_data = false) {
    if (!c.gate_reason.empty()) {
        c.rep.add_skip("classify", "classification of irreducible "
                                   "Yetter-Drinfeld modules",
                       c.gate_reason);
        return;
    }
    auto t0 = clock_type::now();
    try {
        const auto cls =
            classify_simple_yd(c.obj.H, *c.obj.R, *c.t, *c.irr, c.seed);
        const size_t expect = c.irr->size() * c.irr->size();
        c.rep.add_pass("classify.count",
                       std::to_string(cls.size()) +
                           " simple objects bar(W (x) M), as expected |Irr|^2 = " +
                           std::to_string(expect),
                       ms_since(t0));
        if (cls.size() != expect)
            c.rep.add_fail("classify.count", "count equals |Irr(H)|^2",
                           std::to_string(cls.size()));
        c.rep.add_pass("classify.simple",
                       "every bar(W (x) M) has endomorphism dimension 1");
        c.rep.add_pass("classify.pairwise",
                       "objects from distinct (W,M) are non-isomorphic");
        if (emit_data) {
            auto sparse_mat = [](const Mat& m) {
                nlohmann::json arr = nlohmann::json::array();
                for (size_t r = 0; r < m.rows(); ++r)
                    for (size_t cc = 0; cc < m.cols(); ++cc) {
                        const Scalar v = m.at(r, cc);
                        if (!v.is_zero())
                            arr.push_back(
                                nlohmann::json::array({r, cc, v.str()}));
                    }
                return arr;
            };
            nlohmann::json objects = nlohmann::json::array();
            for (const auto& obj : cls) {
                nlohmann::json e;
                e["label"] = "bar(W" + std::to_string(obj.w_index) + ",M" +
                             std::to_string(obj.m_index) + ")";
                e["w_index"] = obj.w_index;
                e["m_index"] = obj.m_index;
                e["dim"] = obj.object.act.dim;
                e["d_w_dim"] = obj.d_w.dim();
                nlohmann::json act = nlohmann::json::array();
                for (const auto& a : obj.object.act.act)
                    act.push_back(sparse_mat(a));
                e["action"] = act;
                e["coaction"] = sparse_mat(obj.object.coaction);
                objects.push_back(std::move(e));
            }
            c.rep.set_data(nlohmann::json{{"objects", objects}});
        }
    } catch (const SimplicityFailure& e) {
        c.rep.add_fail("classify.simple", "every bar(W (x) M) is simple",
                       e.what());
    }
}

void stage_nw(Ctx& c, size_t w_index, bool emit_data) {
    if (!c.gate_reason.empty()) {
        c.rep.add_skip("nw", "R-adjoint-stable algebra checks", c.gate_reason);
        return;
    }
    const auto& irr = *c.irr;
    if (w_index >= irr.size()) {
        c.rep.add_fail("nw.index", "--w selects a simple module",
                       "index " + std::to_string(w_index) + " of " +
                           std::to_string(irr.size()));
        return;
    }
    auto t0 = clock_type::now();
    const std::string tag = "nw.w" + std::to_string(w_index);
    try {
        const Comodule wc =
            module_to_comodule(irr[w_index].rep, c.obj.H, *c.obj.R, *c.t);
        const StableAlgebra nw = build_nw(c.obj.H, *c.t, wc);
        c.rep.add_pass(tag + ".dim",
                       "dim N_W = " + std::to_string(nw.alg.dim()) +
                           " = dim H",
                       ms_since(t0));
        if (nw.alg.dim() != c.obj.H.dim())
            c.rep.add_fail(tag + ".dim", "dim N_W = dim H",
                           std::to_string(nw.alg.dim()));
        const ThetaPsi tp = theta_psi(c.obj.H, *c.t, irr[w_index].rep, nw);
        c.rep.add_checks(tag, tp.checks);
        if (emit_data) {
            nlohmann::json data;
            data["dim"] = nw.alg.dim();
            nlohmann::json mult = nlohmann::json::array();
            for (size_t i = 0; i < nw.alg.dim(); ++i)
                for (size_t j = 0; j < nw.alg.dim(); ++j)
                    for (const auto& [k, coeff] : nw.alg.mult_nz(i, j))
                        mult.push_back(
                            nlohmann::json::array({i, j, k, coeff.str()}));
            data["mult"] = mult;
            nlohmann::json basis = nlohmann::json::array();
            for (size_t i = 0; i < nw.basis.dim(); ++i) {
                nlohmann::json vec = nlohmann::json::array();
                nw.basis.basis_vec(i).for_nonzero(
                    [&](size_t idx, const Scalar& coeff) {
                        vec.push_back(
                            nlohmann::json::array({idx, coeff.str()}));
                    });
                basis.push_back(vec);
            }
            data["basis_in_wstar_h_w"] = basis;
            c.rep.set_data(std::move(data));
        }
    } catch (const Error& e) {
        c.rep.add_fail(tag, "N_W construction and theta/psi verify", e.what());
    }
}

void stage_equivalence(Ctx& c, size_t w_index) {
    if (!c.gate_reason.empty()) {
        c.rep.add_skip("equivalence", "category equivalence round trips",
                       c.gate_reason);
        return;
    }
    const auto& irr = *c.irr;
    if (w_index >= irr.size()) {
        c.rep.add_fail("equivalence.index", "--w selects a simple module",
                       "index " + std::to_string(w_index) + " of " +
                           std::to_string(irr.size()));
        return;
    }
    const std::string tag = "equivalence.w" + std::to_string(w_index);
    auto t0 = clock_type::now();
    try {
        const Comodule wc =
            module_to_comodule(irr[w_index].rep, c.obj.H, *c.obj.R, *c.t);
        const StableAlgebra nw = build_nw(c.obj.H, *c.t, wc);
        const ThetaPsi tp = theta_psi(c.obj.H, *c.t, irr[w_index].rep, nw);
        bool fwd_ok = true, back_ok = true;
        for (size_t mi = 0; mi < irr.size(); ++mi) {
            const RelHopfModule bar = bar_tensor(
                irr[w_index].rep, irr[mi].rep, c.obj.H, *c.obj.R, *c.t);
            const ForwardImage fwd = forward_functor(nw, bar);
            fwd_ok = fwd_ok &&
                     forward_image_of_bar(nw, fwd, irr[mi].rep, tp.psi,
                                          irr[w_index].rep.dim)
                         .has_value();
            back_ok = back_ok &&
                      round_trip_iso(c.obj.H, *c.t, nw, bar, c.seed)
                          .has_value();
        }
        if (fwd_ok)
            c.rep.add_pass(tag + ".forward",
                           "forward images of bar(W (x) M) match M through psi",
                           ms_since(t0));
        else
            c.rep.add_fail(tag + ".forward",
                           "forward images of bar(W (x) M) match M through psi",
                           "");
        if (back_ok)
            c.rep.add_pass(tag + ".roundtrip",
                           "back(forward(X)) isomorphic to X for all bar objects");
        else
            c.rep.add_fail(tag + ".roundtrip",
                           "back(forward(X)) isomorphic to X", "");
    } catch (const Error& e) {
        c.rep.add_fail(tag, "equivalence pipeline runs", e.what());
    }
}

int finish(const Report& rep, const std::string& json_path, bool quiet) {
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "cannot write report to " << json_path << "\n";
            return 1;
        }
        out << rep.to_json();
    }
    if (!quiet) std::cout << rep.to_text();
    return rep.exit_code();
}

}  // namespace

int run_command(const std::vector<std::string>& args, Report* out) {
    CLI::App app{
        "exact structure-constant toolkit for quasi-triangular Hopf algebras"};
    app.name("hopflab");

    std::string json_path;
    uint64_t seed = 0;
    bool quiet = false;
    app.add_option("--json", json_path, "write the canonical JSON report here");
    app.add_option("--seed", seed, "seed for the deterministic searches");
    app.add_flag("--quiet", quiet, "suppress the text report");

    std::string gen_kind, gen_group, gen_field = "rational", gen_out;
    auto* gen = app.add_subcommand("gen", "generate an example Hopf algebra");
    gen->fallthrough();
    gen->add_option("kind", gen_kind, "group-algebra or double")
        ->required()
        ->check(CLI::IsMember({"group-algebra", "double"}));
    gen->add_option("group", gen_group, "group spec: Z<n>, C<n>, D<n>, S<n>")
        ->required();
    gen->add_option("--field", gen_field, "field descriptor (rational, fp:<p>)");
    gen->add_option("-o,--output", gen_out, "output hopfspec file")->required();

    std::string in_file, trans_out;
    auto* check = app.add_subcommand("check", "verify the Hopf and QT axioms");
    check->fallthrough();
    check->add_option("file", in_file)->required();
    auto* fact = app.add_subcommand("factorizable",
                                    "rank of the Drinfeld map and of Phi");
    fact->fallthrough();
    fact->add_option("file", in_file)->required();
    auto* trans = app.add_subcommand("transmute",
                                     "build and verify the braided group H_R");
    trans->fallthrough();
    trans->add_option("file", in_file)->required();
    trans->add_option("-o,--output", trans_out,
                      "write Delta_R/S_R in hopfspec-coalgebra form");
    auto* dec = app.add_subcommand(
        "decompose", "Irr(H), simple subcoalgebras, D_W structure theorems");
    dec->fallthrough();
    dec->add_option("file", in_file)->required();
    auto* yd = app.add_subcommand("yd", "Yetter-Drinfeld module commands");
    yd->fallthrough();
    auto* ydc = yd->add_subcommand(
        "classify", "classify the irreducible Yetter-Drinfeld modules");
    ydc->fallthrough();
    ydc->add_option("file", in_file)->required();
    yd->require_subcommand(1);
    size_t w_index = 0;
    auto* nw = app.add_subcommand("nw", "R-adjoint-stable algebra of one W");
    nw->fallthrough();
    nw->add_option("file", in_file)->required();
    nw->add_option("--w", w_index, "index into Irr(H)")->required();
    auto* equiv = app.add_subcommand("equivalence",
                                     "category equivalence round trips");
    equiv->fallthrough();
    equiv->add_option("file", in_file)->required();
    equiv->add_option("--w", w_index, "index into Irr(H)")->required();
    auto* suite = app.add_subcommand("suite", "run everything in order");
    suite->fallthrough();
    suite->add_option("file", in_file)->required();

    app.require_subcommand(1);

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    std::string prog = "hopflab";
    argv.push_back(prog.data());
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    Report rep;
    Ctx ctx(rep, seed);
    int code = 0;

    try {
        if (gen->parsed()) {
            Field f;
            GroupTable g = GroupTable::cyclic(1);
            try {
                f = Field::parse(gen_field);
                g = GroupTable::parse(gen_group);
            } catch (const Error& e) {
                std::cerr << e.what() << "\n";
                return 2;
            }
            HopfObject obj = gen_kind == "double" ? drinfeld_double(g, f)
                                                  : group_algebra(g, f);
            obj.provenance += " seed=" + std::to_string(seed);
            write_hopfspec(obj, gen_out);
            for (const auto& w : obj.warnings) {
                rep.add_info("gen.warning", w, true);
                if (!quiet) std::cerr << "warning: " << w << "\n";
            }
            rep.add_pass("gen",
                         obj.name + " written to " + gen_out +
                             " (dim " + std::to_string(obj.H.dim()) + ")");
            rep.set_input(gen_out, hopfspec_to_string(obj));
        } else if (check->parsed()) {
            if (stage_load(ctx, in_file)) stage_axioms(ctx);
        } else if (fact->parsed()) {
            if (stage_load(ctx, in_file)) {
                stage_axioms(ctx);
                if (!ctx.obj.R)
                    rep.add_skip("factorizable", "Drinfeld map rank",
                                 "no R-matrix in the input");
                else
                    stage_factorizability(ctx);
            }
        } else if (trans->parsed()) {
            if (stage_load(ctx, in_file)) {
                stage_axioms(ctx);
                if (stage_transmute(ctx) && !trans_out.empty()) {
                    nlohmann::json j;
                    j["field"] = ctx.obj.H.field().descriptor();
                    j["dim"] = ctx.obj.H.dim();
                    j["basis"] = ctx.obj.basis_labels;
                    nlohmann::json cm = nlohmann::json::array();
                    const size_t n = ctx.obj.H.dim();
                    for (size_t i = 0; i < n; ++i)
                        for (const auto& [a, b, coeff] :
                             ctx.t->coalgebra.delta_nz(i))
                            cm.push_back(nlohmann::json::array(
                                {i, a, b, coeff.str()}));
                    std::sort(cm.begin(), cm.end());
                    j["comult"] = cm;
                    nlohmann::json cu = nlohmann::json::array();
                    for (size_t i = 0; i < n; ++i)
                        cu.push_back(ctx.t->coalgebra.counit().at(i).str());
                    j["counit"] = cu;
                    nlohmann::json sr = nlohmann::json::array();
                    for (size_t i = 0; i < n; ++i)
                        for (size_t jx = 0; jx < n; ++jx) {
                            const Scalar v = ctx.t->antipode_r.at(i, jx);
                            if (!v.is_zero())
                                sr.push_back(nlohmann::json::array(
                                    {i, jx, v.str()}));
                        }
                    j["s_r"] = sr;
                    j["metadata"] = {{"name", ctx.obj.name + " transmuted"},
                                     {"provenance",
                                      "transmute " + in_file}};
                    std::ofstream o(trans_out);
                    if (!o) throw Error("cannot write " + trans_out);
                    o << j.dump(2) << "\n";
                    rep.add_pass("transmute.output",
                                 "Delta_R/S_R written to " + trans_out);
                }
            }
        } else if (dec->parsed()) {
            if (stage_load(ctx, in_file)) {
                stage_axioms(ctx);
                stage_factorizability(ctx);
                stage_transmute(ctx);
                stage_hypotheses(ctx);
                stage_decompose(ctx);
            }
        } else if (ydc->parsed()) {
            if (stage_load(ctx, in_file)) {
                stage_axioms(ctx);
                stage_factorizability(ctx);
                stage_transmute(ctx);
                stage_hypotheses(ctx);
                stage_classify(ctx, /*emit_data=*/true);
            }
        } else if (nw->parsed()) {
            if (stage_load(ctx, in_file)) {
                stage_axioms(ctx);
                stage_factorizability(ctx);
                stage_transmute(ctx);
                stage_hypotheses(ctx);
                stage_nw(ctx, w_index, /*emit_data=*/true);
            }
        } else if (equiv->parsed()) {
            if (stage_load(ctx, in_file)) {
                stage_axioms(ctx);
                stage_factorizability(ctx);
                stage_transmute(ctx);
                stage_hypotheses(ctx);
                stage_equivalence(ctx, w_index);
            }
        } else if (suite->parsed()) {
            if (stage_load(ctx, in_file)) {
                stage_axioms(ctx);
                stage_factorizability(ctx);
                stage_transmute(ctx);
                stage_hypotheses(ctx);
                stage_decompose(ctx);
                stage_classify(ctx);
                if (ctx.gate_reason.empty()) {
                    for (size_t wi = 0; wi < ctx.irr->size(); ++wi) {
                        stage_nw(ctx, wi, /*emit_data=*/false);
                        stage_equivalence(ctx, wi);
                    }
                } else {
                    rep.add_skip("nw", "R-adjoint-stable algebra checks",
                                 ctx.gate_reason);
                    rep.add_skip("equivalence",
                                 "category equivalence round trips",
                                 ctx.gate_reason);
                }
            }
        }
    } catch (const ConstructionInvalid& e) {
        rep.add_fail("construction", "generator self-validation", e.what());
    } catch (const ValidationError& e) {
        rep.add_fail("validation", "input satisfies the axioms", e.what());
    } catch (const Error& e) {
        rep.add_fail("error", "command completed", e.what());
    }

    code = finish(rep, json_path, quiet);
    if (out) *out = rep;
    return code;
}

}  // namespace hopflab
