// Command-line front end: exact partition-function objects, brute-force
// oracles and the randomized verification suites, all with machine-readable
// JSON output.  Exit codes: 0 success, 1 verification failure, 2 malformed
// input, 3 mathematical precondition failure (error code in the JSON).

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pdwpf/determinants.hpp"
#include "pdwpf/errors.hpp"
#include "pdwpf/gv.hpp"
#include "pdwpf/korepin.hpp"
#include "pdwpf/lattice.hpp"
#include "pdwpf/rat.hpp"
#include "pdwpf/symfun.hpp"
#include "pdwpf/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace pdwpf;

struct Cfg {
    std::string object;
    std::string suite;
    std::string scheme = "rational";
    std::string family = "dwbc";
    std::string form = "x-side";
    std::string xs_csv, ys_csv, bs_csv;
    std::string exs_csv, eys_csv, ebs_csv;
    std::string mult_csv;
    std::string eg = "1";
    std::string g2 = "0";
    int N = 0;
    int n = 0;
    int m = -1;
    bool h_rows = false;
    bool count_only = false;
    std::uint64_t seed = 0;
    int max_n = 0;
    std::string output = "json";
};

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    if (csv.empty()) return out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

ordered_json rat_array(const std::vector<Rat>& v) {
    ordered_json a = ordered_json::array();
    for (const Rat& r : v) a.push_back(r.str());
    return a;
}

ordered_json int_array(const std::vector<int>& v) {
    ordered_json a = ordered_json::array();
    for (const int x : v) a.push_back(x);
    return a;
}

bool trig_selected(const Cfg& cfg) {
    return cfg.scheme == "trig" || cfg.scheme == "trigonometric";
}

WeightScheme parse_scheme(const Cfg& cfg) {
    if (cfg.scheme == "rational") return WeightScheme::rational();
    if (cfg.scheme == "polynomial") return WeightScheme::polynomial();
    if (trig_selected(cfg)) return WeightScheme::trigonometric(Rat::parse(cfg.eg));
    throw std::invalid_argument("unknown scheme: " + cfg.scheme);
}

BoundaryFamily parse_family(const std::string& s) {
    if (s == "dwbc") return BoundaryFamily::DWBC;
    if (s == "pdw-topsum") return BoundaryFamily::PDW_TOPSUM;
    if (s == "pdw-split") return BoundaryFamily::PDW_SPLIT;
    if (s == "pdw-z2") return BoundaryFamily::PDW_Z2;
    if (s == "scalar-product") return BoundaryFamily::SCALAR_PRODUCT;
    throw std::invalid_argument("unknown family: " + s);
}

void emit(const Cfg& cfg, const ordered_json& doc, const std::string& value) {
    if (cfg.output == "text")
        std::cout << value << "\n";
    else
        std::cout << doc.dump(2) << "\n";
}

// Shared by `compute --object oracle-*` and the `oracle` subcommand.
int run_oracle(const Cfg& cfg) {
    const BoundaryFamily fam = parse_family(cfg.family);
    LatticeSpec spec;
    spec.boundary.family = fam;
    spec.weights = parse_scheme(cfg);
    ordered_json inputs;
    inputs["family"] = cfg.family;
    if (cfg.count_only) {
        spec.boundary.N = cfg.N;
        spec.boundary.n = cfg.n > 0 ? cfg.n : (fam == BoundaryFamily::DWBC ? cfg.N : 0);
        if (fam == BoundaryFamily::PDW_SPLIT) spec.boundary.m = cfg.m;
        inputs["n"] = spec.boundary.n;
        inputs["N"] = spec.boundary.N;
        if (fam == BoundaryFamily::PDW_SPLIT) inputs["m"] = spec.boundary.m;
        const std::int64_t c = count_configurations(spec);
        ordered_json doc;
        doc["object"] = "oracle-count";
        doc["inputs"] = inputs;
        doc["value"] = std::to_string(c);
        emit(cfg, doc, std::to_string(c));
        return 0;
    }
    const bool trig = trig_selected(cfg);
    spec.rapidities.xs = parse_rat_list(trig ? cfg.exs_csv : cfg.xs_csv);
    spec.rapidities.ys = parse_rat_list(trig ? cfg.eys_csv : cfg.ys_csv);
    spec.rapidities.bs = parse_rat_list(trig ? cfg.ebs_csv : cfg.bs_csv);
    spec.boundary.n = static_cast<int>(spec.rapidities.xs.size());
    spec.boundary.N = static_cast<int>(spec.rapidities.ys.size());
    if (fam == BoundaryFamily::PDW_SPLIT) spec.boundary.m = cfg.m;
    inputs["scheme"] = trig ? "trigonometric" : cfg.scheme;
    inputs[trig ? "ex" : "x"] = rat_array(spec.rapidities.xs);
    inputs[trig ? "ey" : "y"] = rat_array(spec.rapidities.ys);
    if (!spec.rapidities.bs.empty())
        inputs[trig ? "eb" : "b"] = rat_array(spec.rapidities.bs);
    if (trig) inputs["eg"] = Rat::parse(cfg.eg).str();
    if (fam == BoundaryFamily::PDW_SPLIT) inputs["m"] = cfg.m;
    const Rat v = oracle_partition_function(spec);
    ordered_json doc;
    doc["object"] = "oracle-pf";
    doc["inputs"] = inputs;
    doc["value"] = v.str();
    emit(cfg, doc, v.str());
    return 0;
}

int cmd_compute(const Cfg& cfg) {
    const std::string& obj = cfg.object;
    if (obj == "oracle-pf" || obj == "oracle-count") {
        Cfg c2 = cfg;
        c2.count_only = obj == "oracle-count";
        return run_oracle(c2);
    }

    const auto xs = parse_rat_list(cfg.xs_csv);
    const auto ys = parse_rat_list(cfg.ys_csv);
    const auto bs = parse_rat_list(cfg.bs_csv);
    const auto exs = parse_rat_list(cfg.exs_csv);
    const auto eys = parse_rat_list(cfg.eys_csv);
    const auto ebs = parse_rat_list(cfg.ebs_csv);
    const Rat eg = Rat::parse(cfg.eg);

    ordered_json inputs;
    Rat value;
    if (obj == "dwpf") {
        if (trig_selected(cfg)) {
            value = izergin_dwpf(exs, eys, WeightScheme::trigonometric(eg));
            inputs["scheme"] = "trigonometric";
            inputs["ex"] = rat_array(exs);
            inputs["ey"] = rat_array(eys);
            inputs["eg"] = eg.str();
        } else {
            value = izergin_dwpf(xs, ys, parse_scheme(cfg));
            inputs["scheme"] = cfg.scheme;
            inputs["x"] = rat_array(xs);
            inputs["y"] = rat_array(ys);
        }
    } else if (obj == "pdwpf-hybrid") {
        value = pdwpf_hybrid(xs, ys, cfg.h_rows);
        inputs["x"] = rat_array(xs);
        inputs["y"] = rat_array(ys);
        inputs["h_rows"] = cfg.h_rows;
    } else if (obj == "pdwpf-kostov") {
        value = pdwpf_kostov(xs, ys);
        inputs["x"] = rat_array(xs);
        inputs["y"] = rat_array(ys);
    } else if (obj == "pdwpf-sum") {
        value = pdwpf_partition_sum(xs, ys);
        inputs["x"] = rat_array(xs);
        inputs["y"] = rat_array(ys);
    } else if (obj == "pdwpf-trig-hybrid" || obj == "pdwpf-trig-kostov") {
        value = obj == "pdwpf-trig-hybrid" ? pdwpf_trig_hybrid(exs, eys, eg)
                                           : pdwpf_trig_kostov(exs, eys, eg);
        inputs["ex"] = rat_array(exs);
        inputs["ey"] = rat_array(eys);
        inputs["eg"] = eg.str();
    } else if (obj == "scalar-product") {
        if (trig_selected(cfg)) {
            value = slavnov_scalar_product_trig(exs, ebs, eys, eg);
            inputs["scheme"] = "trigonometric";
            inputs["ex"] = rat_array(exs);
            inputs["eb"] = rat_array(ebs);
            inputs["ey"] = rat_array(eys);
            inputs["eg"] = eg.str();
        } else {
            value = slavnov_scalar_product(xs, bs, ys);
            inputs["scheme"] = "rational";
            inputs["x"] = rat_array(xs);
            inputs["b"] = rat_array(bs);
            inputs["y"] = rat_array(ys);
        }
    } else if (obj == "zeta1" || obj == "zeta2") {
        value = zeta(obj == "zeta1" ? ZetaVariant::ZETA1 : ZetaVariant::ZETA2, xs, ys);
        inputs["x"] = rat_array(xs);
        inputs["y"] = rat_array(ys);
    } else if (obj == "tau") {
        const bool root_side = cfg.form == "root-side";
        if (!root_side && cfg.form != "x-side")
            throw std::invalid_argument("tau form must be x-side or root-side");
        const TauSpec spec = root_side ? make_tau_s(xs, ys) : make_tau_ik(xs, ys);
        std::vector<int> mult = parse_int_list(cfg.mult_csv);
        if (mult.empty()) mult.assign(spec.miwa.size(), 0);
        value = tau_value(spec, mult);
        inputs["form"] = cfg.form;
        inputs["x"] = rat_array(xs);
        inputs["y"] = rat_array(ys);
        inputs["mult"] = int_array(mult);
    } else if (obj == "gv-det") {
        const int N = cfg.N > 0 ? cfg.N : static_cast<int>(xs.size());
        const Rat g2 = Rat::parse(cfg.g2);
        value = gv_pdwpf_det(xs, N, g2);
        inputs["x"] = rat_array(xs);
        inputs["N"] = N;
        inputs["g2"] = g2.str();
    } else {
        throw std::invalid_argument("unknown object: " + obj);
    }

    ordered_json doc;
    doc["object"] = obj;
    doc["inputs"] = inputs;
    doc["value"] = value.str();
    emit(cfg, doc, value.str());
    return 0;
}

int cmd_verify(const Cfg& cfg) {
    if (!is_suite_name(cfg.suite))
        throw std::invalid_argument("unknown suite: " + cfg.suite);
    const SuiteReport rep = run_suite(cfg.suite, cfg.seed, cfg.max_n);
    int failed = 0;
    for (const auto& c : rep.cases)
        if (!c.pass) ++failed;
    if (cfg.output == "text") {
        for (const auto& c : rep.cases) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
                      << "  expected=" << c.expected << "  actual=" << c.actual;
            if (!c.note.empty()) std::cout << "  note=" << c.note;
            std::cout << "\n";
        }
        std::cout << "suite=" << rep.suite << " seed=" << rep.seed
                  << " cases=" << rep.cases.size() << " failed=" << failed << "\n";
    } else {
        ordered_json doc;
        doc["suite"] = rep.suite;
        doc["seed"] = rep.seed;
        doc["max_n"] = cfg.max_n;
        ordered_json cases = ordered_json::array();
        for (const auto& c : rep.cases) {
            ordered_json jc;
            jc["id"] = c.id;
            jc["name"] = c.name;
            jc["expected"] = c.expected;
            jc["actual"] = c.actual;
            jc["note"] = c.note;
            jc["pass"] = c.pass;
            cases.push_back(std::move(jc));
        }
        doc["cases"] = std::move(cases);
        doc["passed"] = static_cast<int>(rep.cases.size()) - failed;
        doc["failed"] = failed;
        doc["pass"] = failed == 0;
        std::cout << doc.dump(2) << "\n";
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    Cfg cfg;
    CLI::App app{"exact six-vertex partition functions, determinant identities and "
                 "verification suites"};
    app.require_subcommand(1);

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--scheme", cfg.scheme, "rational | polynomial | trig");
        sub->add_option("--x", cfg.xs_csv, "row rapidities, comma-separated p/q");
        sub->add_option("--y", cfg.ys_csv, "column rapidities, comma-separated p/q");
        sub->add_option("--b", cfg.bs_csv, "upper-block rapidities (scalar product)");
        sub->add_option("--ex", cfg.exs_csv, "multiplicative row rapidities e^x");
        sub->add_option("--ey", cfg.eys_csv, "multiplicative column rapidities e^y");
        sub->add_option("--eb", cfg.ebs_csv, "multiplicative upper-block rapidities e^b");
        sub->add_option("--eg", cfg.eg, "multiplicative anisotropy e^gamma");
        sub->add_option("--output", cfg.output, "json | text");
    };

    CLI::App* comp = app.add_subcommand("compute", "evaluate one object");
    comp->add_option("--object", cfg.object, "what to compute")->required();
    add_common(comp);
    comp->add_option("--family", cfg.family,
                     "dwbc | pdw-topsum | pdw-split | pdw-z2 | scalar-product");
    comp->add_option("--form", cfg.form, "tau source: x-side | root-side");
    comp->add_option("--mult", cfg.mult_csv, "Miwa multiplicities, comma-separated ints");
    comp->add_option("--g2", cfg.g2, "coupling g^2 as p/q");
    comp->add_option("--N", cfg.N, "column count when it cannot be inferred");
    comp->add_option("--n", cfg.n, "row count when it cannot be inferred");
    comp->add_option("--m", cfg.m, "split-boundary parameter");
    comp->add_flag("--h-rows", cfg.h_rows, "use the h-function lower rows");

    CLI::App* orac = app.add_subcommand("oracle", "brute-force lattice walk");
    orac->add_option("--family", cfg.family,
                     "dwbc | pdw-topsum | pdw-split | pdw-z2 | scalar-product")
        ->required();
    add_common(orac);
    orac->add_option("--N", cfg.N, "column count (counting mode)");
    orac->add_option("--n", cfg.n, "row count (counting mode)");
    orac->add_option("--m", cfg.m, "split-boundary parameter");
    orac->add_flag("--count", cfg.count_only, "count configurations instead of summing");

    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", cfg.suite, "suite name or 'all'")->required();
    ver->add_option("--seed", cfg.seed, "64-bit seed for all randomized draws");
    ver->add_option("--max-N", cfg.max_n, "cap the lattice sizes (0 = suite default)");
    ver->add_option("--output", cfg.output, "json | text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(comp)) return cmd_compute(cfg);
        if (app.got_subcommand(orac)) return run_oracle(cfg);
        return cmd_verify(cfg);
    } catch (const std::invalid_argument& e) {
        ordered_json err;
        err["error"] = "invalid-argument";
        err["message"] = e.what();
        std::cout << err.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        ordered_json err;
        err["error"] = error_code_of(e);
        err["message"] = e.what();
        std::cout << err.dump(2) << "\n";
        return 3;
    }
}
