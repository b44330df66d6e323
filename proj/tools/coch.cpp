#include <algorithm>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "coch/fuzz.hpp"
#include "coch/json_io.hpp"

namespace {

using coch::json;

json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw coch::ParseError("cannot open \"" + path + "\"");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw coch::ParseError(path + ": " + e.what());
    }
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump() << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw coch::ParseError("cannot write \"" + out_path + "\"");
    out << j.dump() << "\n";
}

coch::Field parse_field(const std::string& s) {
    if (s == "q") return coch::Field::rationals();
    if (s.rfind("fp:", 0) == 0) {
        try {
            return coch::Field::fp(std::stoul(s.substr(3)));
        } catch (const coch::PreconditionError& e) {
            throw coch::ParseError(e.what());
        } catch (const std::exception&) {
            throw coch::ParseError("malformed field \"" + s + "\"");
        }
    }
    throw coch::ParseError("field must be fp:P or q, got \"" + s + "\"");
}

coch::Flavor parse_flavor(const std::string& s) {
    if (s == "c-fw") return coch::Flavor::C_FW;
    if (s == "cw-f") return coch::Flavor::CW_F;
    throw coch::ParseError("flavor must be c-fw or cw-f, got \"" + s + "\"");
}

int run_check(const std::string& path) {
    json j = load(path);
    coch::Report report;
    std::string what;
    if (j.contains("dims")) {
        what = "complex";
        report = coch::validate_complex(coch::complex_from_json(j));
    } else if (j.contains("src") && j.contains("tgt") && j.contains("f")) {
        bool contr = j.at("src").contains("h");
        what = contr ? "contraction morphism" : "retraction morphism";
        bool ok = contr ? coch::check_contr_morphism(coch::contr_morphism_from_json(j))
                        : coch::check_ar_morphism(coch::ar_morphism_from_json(j));
        if (!ok) report.fail("morphism identity fails");
    } else if (j.contains("h")) {
        if (j.value("kind", "") == "sdr") {
            what = "strong deformation retraction";
            report = coch::check_sdr(coch::sdr_from_json(j));
        } else {
            what = "contraction";
            report = coch::check_contraction(coch::sdr_from_json(j));
        }
    } else if (j.contains("M")) {
        what = "acyclic retraction";
        report = coch::check_ar(coch::ar_from_json(j));
    } else {
        throw coch::ParseError(path + ": unrecognized input shape");
    }
    std::cout << what << ": " << (report.pass() ? "ok\n" : "FAIL\n");
    for (const auto& f : report.failures) std::cout << "  " << f << "\n";
    return report.pass() ? 0 : 1;
}

int run_trick(int which, const std::string& path, const std::string& out) {
    json j = load(path);
    if (which == 1) {
        // diagrams with homotopies keep them, so the output can feed trick3
        if (j.contains("src") && j.at("src").contains("h")) {
            coch::ContrMorphism m = coch::contr_morphism_from_json(j);
            coch::ArMorphism r = coch::trick1(m.f, m.src.ar, m.tgt.ar);
            emit(coch::contr_morphism_to_json(coch::ContrMorphism{m.src, m.tgt, r.f}), out);
        } else {
            coch::ArMorphism m = coch::ar_morphism_from_json(j);
            coch::ArMorphism r = coch::trick1(m.f, m.src, m.tgt);
            emit(coch::ar_morphism_to_json(r), out);
        }
    } else if (which == 2) {
        coch::Sdr s = coch::sdr_from_json(j);
        emit(coch::sdr_to_json(coch::trick2(s)), out);
    } else {
        coch::ContrMorphism m = coch::contr_morphism_from_json(j);
        emit(coch::contr_morphism_to_json(coch::trick3(m)), out);
    }
    return 0;
}

int run_factor(const std::string& path, const std::string& category, const std::string& flavor_s,
               bool emit_cells, const std::string& out) {
    json j = load(path);
    coch::Flavor flavor = parse_flavor(flavor_s);
    json result{{"category", category}, {"flavor", flavor_s}};
    auto attach_witness = [&](const coch::CofibrationWitness& w) {
        if (!emit_cells) return;
        if (w.cells) result["cells"] = coch::cells_to_json(*w.cells);
        if (w.retract) result["retraction"] = coch::sdr_to_json(*w.retract);
    };
    if (category == "coch") {
        coch::GradedMap alpha = coch::chain_map_from_json(j);
        coch::CochFactorization fact = flavor == coch::Flavor::C_FW
                                           ? coch::factor_coch_c_fw(alpha)
                                           : coch::factor_coch_cw_f(alpha);
        result["source"] = coch::complex_to_json(alpha.src());
        result["target"] = coch::complex_to_json(alpha.tgt());
        result["middle"] = coch::complex_to_json(fact.middle);
        result["left"] = coch::graded_map_to_json(fact.left);
        result["right"] = coch::graded_map_to_json(fact.right);
        attach_witness(fact.witness);
    } else if (category == "ar") {
        coch::ArMorphism m = coch::ar_morphism_from_json(j);
        coch::ArFactorization fact = coch::factor_ar(m, flavor);
        result["source"] = coch::ar_to_json(m.src);
        result["target"] = coch::ar_to_json(m.tgt);
        result["middle"] = coch::ar_to_json(fact.middle);
        result["left"] = coch::graded_map_to_json(fact.left.f);
        result["right"] = coch::graded_map_to_json(fact.right.f);
        attach_witness(fact.left_witness);
    } else if (category == "contr") {
        coch::ContrMorphism m = coch::contr_morphism_from_json(j);
        coch::ContrFactorization fact = coch::factor_contr(m, flavor);
        result["source"] = coch::sdr_to_json(m.src);
        result["target"] = coch::sdr_to_json(m.tgt);
        result["middle"] = coch::sdr_to_json(fact.middle);
        result["left"] = coch::graded_map_to_json(fact.left.f);
        result["right"] = coch::graded_map_to_json(fact.right.f);
        attach_witness(fact.ar.left_witness);
    } else {
        throw coch::ParseError("category must be coch, ar or contr");
    }
    emit(result, out);
    return 0;
}

int run_lift(const std::string& path, const std::string& category, const std::string& out) {
    json j = load(path);
    json result{{"category", category}};
    if (category == "coch") {
        coch::LiftingProblem p = coch::coch_square_from_json(j);
        result["lift"] = coch::graded_map_to_json(coch::lift_coch(p));
    } else if (category == "ar") {
        coch::ArLiftingProblem p = coch::ar_square_from_json(j);
        result["lift"] = coch::graded_map_to_json(coch::lift_ar(p).f);
    } else if (category == "contr") {
        coch::ContrLiftingProblem p = coch::contr_square_from_json(j);
        result["lift"] = coch::graded_map_to_json(coch::lift_contr(p).f);
    } else {
        throw coch::ParseError("category must be coch, ar or contr");
    }
    emit(result, out);
    return 0;
}

int run_path(const std::string& path, const std::string& out) {
    coch::Complex b = coch::complex_from_json(load(path));
    coch::PathObject p = coch::path_object(b);
    emit(json{{"source", coch::complex_to_json(b)},
              {"complex", coch::complex_to_json(p.object)},
              {"incl", coch::graded_map_to_json(p.incl)},
              {"proj", coch::graded_map_to_json(p.proj)},
              {"sum", coch::complex_to_json(p.target_sum.sum)}},
         out);
    return 0;
}

int run_retract(const std::string& path, const std::string& out) {
    coch::GradedMap g = coch::chain_map_from_json(load(path));
    coch::RetractPresentation r = coch::exhibit_retract(g);
    emit(json{{"source", coch::complex_to_json(g.src())},
              {"target", coch::complex_to_json(g.tgt())},
              {"middle", coch::complex_to_json(r.f.f.tgt())},
              {"g", coch::graded_map_to_json(r.g)},
              {"f", coch::graded_map_to_json(r.f.f)},
              {"cells", coch::cells_to_json(r.f)},
              {"section", coch::graded_map_to_json(r.section)},
              {"retraction", coch::graded_map_to_json(r.retraction)}},
         out);
    return 0;
}

int run_fuzz(const std::string& campaign, int trials, std::uint64_t seed,
             const std::string& field_s, int lo, int hi, int max_dim) {
    auto names = coch::campaign_names();
    if (std::find(names.begin(), names.end(), campaign) == names.end())
        throw coch::ParseError("unknown campaign \"" + campaign + "\"");
    coch::GenConfig cfg;
    cfg.seed = seed;
    cfg.field = parse_field(field_s);
    cfg.lo = lo;
    cfg.hi = hi;
    cfg.max_dim = max_dim;
    if (cfg.hi < cfg.lo) throw coch::ParseError("support window needs lo <= hi");
    coch::FuzzReport rep = coch::run_campaign(campaign, trials, cfg);
    std::cout << coch::report_to_json(rep).dump() << "\n";
    return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cochain complexes, contractions, and model-structure factorizations"};
    app.require_subcommand(1);

    std::string in_path, out_path, category = "coch", flavor = "c-fw";
    bool emit_cells = false;

    auto* check = app.add_subcommand("check", "validate a complex, diagram or morphism file");
    check->add_option("input", in_path, "JSON input file")->required();

    auto* t1 = app.add_subcommand("trick1", "straighten a chain map into an AR morphism");
    t1->add_option("input", in_path)->required();
    t1->add_option("-o,--output", out_path);

    auto* t2 = app.add_subcommand("trick2", "normalize an SDR into a contraction");
    t2->add_option("input", in_path)->required();
    t2->add_option("-o,--output", out_path);

    auto* t3 = app.add_subcommand("trick3", "straighten an AR morphism of contractions");
    t3->add_option("input", in_path)->required();
    t3->add_option("-o,--output", out_path);

    auto* factor = app.add_subcommand("factor", "factor a morphism");
    factor->add_option("input", in_path)->required();
    factor->add_option("--category", category, "coch | ar | contr");
    factor->add_option("--flavor", flavor, "c-fw | cw-f");
    factor->add_flag("--emit-cells", emit_cells, "include the cofibration witness data");
    factor->add_option("-o,--output", out_path);

    auto* lift = app.add_subcommand("lift", "solve a lifting square");
    lift->add_option("input", in_path)->required();
    lift->add_option("--category", category, "coch | ar | contr");
    lift->add_option("-o,--output", out_path);

    auto* pathc = app.add_subcommand("path", "path object of a complex");
    pathc->add_option("input", in_path)->required();
    pathc->add_option("-o,--output", out_path);

    auto* retr = app.add_subcommand("retract", "retract presentation of an injective chain map");
    retr->add_option("input", in_path)->required();
    retr->add_option("-o,--output", out_path);

    std::string campaign = "tricks", field_s = "fp:5";
    int trials = 100, lo = -2, hi = 2, max_dim = 4;
    std::uint64_t seed = 1;
    auto* fuzz = app.add_subcommand("fuzz", "run a property-fuzzing campaign");
    fuzz->add_option("--campaign", campaign, "tricks | path | semifree | mc-ar | mc-contr | ...");
    fuzz->add_option("--trials", trials);
    fuzz->add_option("--seed", seed);
    fuzz->add_option("--field", field_s, "fp:P or q");
    fuzz->add_option("--lo", lo, "support window low end");
    fuzz->add_option("--hi", hi, "support window high end");
    fuzz->add_option("--max-dim", max_dim, "per-degree dimension bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(in_path);
        if (t1->parsed()) return run_trick(1, in_path, out_path);
        if (t2->parsed()) return run_trick(2, in_path, out_path);
        if (t3->parsed()) return run_trick(3, in_path, out_path);
        if (factor->parsed()) return run_factor(in_path, category, flavor, emit_cells, out_path);
        if (lift->parsed()) return run_lift(in_path, category, out_path);
        if (pathc->parsed()) return run_path(in_path, out_path);
        if (retr->parsed()) return run_retract(in_path, out_path);
        if (fuzz->parsed()) return run_fuzz(campaign, trials, seed, field_s, lo, hi, max_dim);
    } catch (const coch::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const coch::DimensionError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const coch::FactorizationNonTermination& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const coch::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const coch::InvariantViolation& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
