// tetravol: classification, volumes, b-6j evaluation, asymptotic sweeps, and
// Fenchel-Nielsen coordinates for truncated hyperideal tetrahedra.
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tetravol/b6j.hpp"
#include "tetravol/moduli.hpp"
#include "tetravol/volume.hpp"

using namespace tetravol;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr const char* kCsvVersion = "tetravol-csv-v1";

enum ExitCode { kOk = 0, kParse = 2, kDomain = 3, kNumeric = 4 };

struct ParsedInput {
    std::string kind;  // "lengths" | "angles" | "raw"
    SixC values;
};

ParsedInput parse_six_tuple(const json& j) {
    ParsedInput in;
    if (j.contains("pi_pair")) {
        // AdS angle shorthand: theta = pi - i phi on the pair, i phi elsewhere
        const int k = j.at("pi_pair").get<int>();
        if (k < 0 || k > 2)
            throw std::invalid_argument("pi_pair must be 0, 1 or 2");
        const auto phi = j.at("im").get<std::vector<double>>();
        if (phi.size() != 6)
            throw std::invalid_argument("im must have six entries");
        in.kind = "angles";
        for (int s = 0; s < 6; ++s) in.values[s] = cplx{0.0, phi[s]};
        in.values[k] = cplx{kPi, -phi[k]};
        in.values[k + 3] = cplx{kPi, -phi[k + 3]};
        return in;
    }
    in.kind = j.at("kind").get<std::string>();
    if (in.kind != "lengths" && in.kind != "angles" && in.kind != "raw")
        throw std::invalid_argument("kind must be lengths, angles or raw");
    const auto& v = j.at("values");
    if (!v.is_array() || v.size() != 6)
        throw std::invalid_argument("values must have six entries");
    for (int s = 0; s < 6; ++s) {
        const auto& e = v.at(s);
        if (e.is_number()) {
            in.values[s] = cplx{e.get<double>(), 0.0};
        } else if (e.is_array() && e.size() == 2) {
            in.values[s] = cplx{e.at(0).get<double>(), e.at(1).get<double>()};
        } else {
            throw std::invalid_argument("values entries must be re or [re, im]");
        }
    }
    return in;
}

ParsedInput load_input(const std::string& file, const std::string& inl) {
    if (file.empty() == inl.empty())
        throw std::invalid_argument("exactly one of --input/--inline required");
    json j;
    if (!file.empty()) {
        std::ifstream f(file);
        if (!f) throw std::invalid_argument("cannot open input file: " + file);
        f >> j;
    } else {
        j = json::parse(inl);
    }
    return parse_six_tuple(j);
}

Six real_six(const SixC& v) {
    Six out;
    for (int k = 0; k < 6; ++k) {
        if (v[k].imag() != 0.0)
            throw std::invalid_argument("entries must be real for this command");
        if (!(v[k].real() > 0.0))
            throw std::domain_error("entries must be positive");
        out[k] = v[k].real();
    }
    return out;
}

json cplx_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

void emit(const json& j) {
    json out = j;
    out["schema_version"] = kSchemaVersion;
    std::printf("%s\n", out.dump(2).c_str());
}

std::vector<double> parse_b_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    if (out.empty()) throw std::invalid_argument("empty b list");
    for (size_t i = 0; i < out.size(); ++i) {
        if (!(out[i] > 0.05 && out[i] < 1.0))
            throw std::invalid_argument("b values must lie in (0.05, 1)");
        if (i > 0 && !(out[i] < out[i - 1]))
            throw std::invalid_argument("b list must be strictly decreasing");
    }
    return out;
}

struct Options {
    std::string input_file, inline_json, b_list_str, format = "json";
    double b = 0.5;
    double tol = 1e-10;
    bool verify = false;
    unsigned seed = 1;
};

int cmd_classify(const Options& opt) {
    const ParsedInput in = load_input(opt.input_file, opt.inline_json);
    if (in.kind != "lengths")
        throw std::invalid_argument("classify expects a lengths tuple");
    const Six l = real_six(in.values);
    const GramMatrix G = gram_from_lengths(l);
    const TetraClass cls = classify_lengths(l);
    json out;
    out["class"] = tetra_class_name(cls);
    out["det"] = G.det();
    const auto sig = G.signature();
    out["signature"] = json::array({sig[0], sig[1], sig[2]});
    if (cls != TetraClass::Flat) {
        const SixC th = angles_from_lengths(l, cls);
        json a = json::array();
        for (int k = 0; k < 6; ++k) a.push_back(cplx_json(th[k]));
        out["angles"] = a;
    }
    emit(out);
    return kOk;
}

int cmd_volume(const Options& opt) {
    const ParsedInput in = load_input(opt.input_file, opt.inline_json);
    json out;
    if (in.kind == "raw")
        throw std::invalid_argument("volume expects lengths or angles");
    if (in.kind == "lengths") {
        const Six l = real_six(in.values);
        const TetraClass cls = classify_lengths(l);
        out["class"] = tetra_class_name(cls);
        if (cls == TetraClass::Flat) {
            out["vol"] = 0.0;
            out["degenerate"] = true;
            emit(out);
            return kOk;
        }
        if (cls == TetraClass::Hyperbolic) {
            const SixC th = angles_from_lengths(l, cls);
            Six thr;
            for (int k = 0; k < 6; ++k) thr[k] = th[k].real();
            const HypAngleVolume hv = hyperbolic_volume_from_angles(thr);
            out["vol"] = hv.vol;
            out["xi_star"] = cplx_json(cplx{hv.xi_star, 0.0});
            if (opt.verify) {
                double res = 0.0;
                const double h = 1e-5;
                for (int k = 0; k < 6; ++k) {
                    Six tp = thr, tm = thr;
                    tp[k] += h;
                    tm[k] -= h;
                    const double fd =
                        (hyperbolic_volume_from_angles(tp).vol -
                         hyperbolic_volume_from_angles(tm).vol) /
                        (2.0 * h);
                    res = std::max(res, std::abs(fd + 0.5 * l[k]));
                }
                out["schlaefli_residual"] = res;
            }
        } else {
            const AdsLengthPotential ap = ads_potential_from_lengths(l);
            const AdsVolume av = ads_volume_from_lengths(l);
            out["vol"] = av.vol_legendre;
            out["cov"] = ap.cov;
            out["cov_tilde"] = ap.cov_tilde;
            out["xi1_star"] = cplx_json(ap.xi1.xi_star);
            out["xi2_star"] = cplx_json(ap.xi2.xi_star);
            if (opt.verify)
                out["volume_route_residual"] =
                    std::abs(av.vol_gradient - av.vol_legendre);
        }
        emit(out);
        return kOk;
    }
    // angles input
    const int pp = pi_pair_slot(in.values);
    if (pp < 0) {
        Six thr;
        for (int k = 0; k < 6; ++k) {
            if (in.values[k].imag() != 0.0)
                throw std::domain_error(
                    "angle tuple is neither real nor carries a pi-pair");
            thr[k] = in.values[k].real();
        }
        const HypAngleVolume hv = hyperbolic_volume_from_angles(thr);
        out["class"] = "hyperbolic";
        out["vol"] = hv.vol;
        out["xi_star"] = cplx_json(cplx{hv.xi_star, 0.0});
    } else {
        const AngleCriterion crit = check_angle_criterion(in.values);
        if (!crit.ok)
            throw std::domain_error("angle tuple fails the AdS criterion");
        const AdsAngleVolume av = ads_volume_from_angles(in.values);
        out["class"] = "anti-de-sitter";
        out["vol"] = av.vol;
        out["xi_star"] = cplx_json(av.accepted.xi_star);
        out["xi_star_rejected"] = cplx_json(av.rejected.xi_star);
        if (opt.verify) {
            const cplx lhs = -av.accepted.U_second *
                             std::exp(-av.accepted.kappa_value /
                                      (kPi * cplx{0.0, 1.0}));
            const cplx rhs = 16.0 * std::sqrt(
                cplx(gram_from_angles(in.values).det(), 0.0));
            out["hessian_residual"] = std::abs(lhs - rhs) / std::abs(rhs);
        }
    }
    emit(out);
    return kOk;
}

EntryMode mode_for(const ParsedInput& in) {
    if (in.kind == "raw") return EntryMode::RawEntries;
    if (in.kind == "lengths") return EntryMode::LengthEntries;
    return pi_pair_slot(in.values) >= 0 ? EntryMode::AdSAngleEntries
                                        : EntryMode::HypAngleEntries;
}

int cmd_b6j(const Options& opt) {
    const ParsedInput in = load_input(opt.input_file, opt.inline_json);
    const B6jParams p = make_params(mode_for(in), in.values, opt.b);
    QuadratureConfig qc;
    qc.tol = opt.tol;
    const B6jEvaluation ev = evaluate(p, qc);
    if (ev.rel_error > 1e-3) {
        std::fprintf(stderr, "quadrature failed to converge (rel_error %.3e)\n",
                     ev.rel_error);
        return kNumeric;
    }
    json out;
    out["b"] = opt.b;
    out["value"] = cplx_json(ev.value);
    out["log_value"] = cplx_json(ev.log_value);
    out["rel_error"] = ev.rel_error;
    out["tail_bound"] = ev.tail_bound;
    out["contour"] = {{"c", ev.contour.c},
                      {"T", ev.contour.T},
                      {"deformed", ev.contour.deformed}};
    if (opt.verify) {
        out["tetrahedral_symmetry_dev"] =
            check_tetrahedral_symmetry(p, qc).max_rel_dev;
        out["reflection_symmetry_dev"] =
            check_reflection_symmetry(p, 0, qc).max_rel_dev;
    }
    emit(out);
    return kOk;
}

GeometryKind sweep_kind(const ParsedInput& in) {
    if (in.kind == "angles")
        return pi_pair_slot(in.values) >= 0 ? GeometryKind::AdSAngles
                                            : GeometryKind::HypAngles;
    Six l;
    for (int k = 0; k < 6; ++k) l[k] = in.values[k].real();
    switch (classify_lengths(l)) {
        case TetraClass::Hyperbolic: return GeometryKind::HypLengths;
        case TetraClass::AntiDeSitter: return GeometryKind::AdSLengths;
        case TetraClass::Flat: return GeometryKind::FlatLengths;
    }
    throw std::logic_error("unreachable");
}

int cmd_sweep(const Options& opt) {
    const ParsedInput in = load_input(opt.input_file, opt.inline_json);
    if (opt.b_list_str.empty())
        throw std::invalid_argument("sweep requires --b-list");
    const std::vector<double> bs = parse_b_list(opt.b_list_str);
    if (in.kind == "lengths") real_six(in.values);  // validates positivity
    const GeometryKind kind = sweep_kind(in);
    QuadratureConfig qc;
    qc.tol = opt.tol;
    const auto rows = asymptotic_sweep(kind, in.values, bs, qc);
    if (opt.format == "csv") {
        std::printf("# %s: b,re_value,im_value,abs_value,prediction,ratio,extracted\n",
                    kCsvVersion);
        for (const SweepRow& r : rows)
            std::printf("%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.b,
                        r.value.real(), r.value.imag(), std::abs(r.value),
                        std::abs(r.prediction), r.abs_ratio, r.extracted);
        return kOk;
    }
    json arr = json::array();
    for (const SweepRow& r : rows) {
        json row;
        row["b"] = r.b;
        row["value"] = cplx_json(r.value);
        row["abs_value"] = std::abs(r.value);
        row["prediction"] = std::abs(r.prediction);
        row["ratio"] = r.abs_ratio;
        row["extracted"] = r.extracted;
        arr.push_back(row);
    }
    emit(json{{"rows", arr}});
    return kOk;
}

int cmd_fn(const Options& opt) {
    const ParsedInput in = load_input(opt.input_file, opt.inline_json);
    if (in.kind != "lengths")
        throw std::invalid_argument("fn expects a lengths tuple");
    const Six l = real_six(in.values);
    const FNCoordinates fn = tetra_to_fn(l);
    const Holonomy H = holonomy_from_embedding(
        reconstruct_vertices(gram_from_lengths(l), TetraClass::AntiDeSitter));
    json out;
    out["lengths"] = fn.lengths;
    out["twists"] = fn.twists;
    out["orientation"] = fn.orientation > 0 ? "+1" : "-1";
    json traces = json::array();
    for (int k = 0; k < 6; ++k)
        traces.push_back({{"trace", H.traces[k]},
                          {"edge_slot", H.edge_slots[k]},
                          {"edge_length", H.edge_lengths[k]}});
    out["trace_dictionary"] = traces;
    emit(out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tetrahedral volumes, b-6j symbols and moduli coordinates"};
    app.require_subcommand(1);
    Options opt;
    std::string command;
    for (const char* name :
         {"classify", "volume", "b6j", "sweep", "fn"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--input", opt.input_file, "input JSON file");
        sub->add_option("--inline", opt.inline_json, "inline JSON");
        sub->add_option("--b", opt.b, "modular parameter b");
        sub->add_option("--b-list", opt.b_list_str,
                        "comma-separated, strictly decreasing, in (0.05,1)");
        sub->add_option("--tol", opt.tol, "quadrature tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", opt.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("--verify", opt.verify, "run extra verification checks");
        sub->add_option("--seed", opt.seed, "seed for randomized suites");
        sub->callback([&command, name]() { command = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kParse;
    }
    try {
        if (command == "classify") return cmd_classify(opt);
        if (command == "volume") return cmd_volume(opt);
        if (command == "b6j") return cmd_b6j(opt);
        if (command == "sweep") return cmd_sweep(opt);
        if (command == "fn") return cmd_fn(opt);
    } catch (const json::exception& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return kParse;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return kParse;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return kDomain;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return kNumeric;
    }
    return kParse;
}
