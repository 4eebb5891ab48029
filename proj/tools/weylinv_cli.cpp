// weylinv: degree-3 invariant groups, generator sets and verification runs.
//
// Exit codes: 0 success, 1 usage or invalid input, 2 verification mismatch.

#include "weylinv/invariants.hpp"
#include "weylinv/pgo8.hpp"
#include "weylinv/random_poly.hpp"
#include "weylinv/spec_parser.hpp"
#include "weylinv/tables.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace weylinv;
using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string spec;
    bool as_json = false;
    bool as_tsv = false;
    int height = 4;
    std::string mode = "both";
    std::uint64_t seed = 1;
    int lambda0 = 0;
    bool show_generators = false;
    bool dump_poly = false;
    std::string input;
    std::vector<std::string> polys;
    std::string family;
    int max_rank = 8;
    std::string type;
    int rank = 0;
    long modulus = 0;
    int cases = 100;
    int tuples = 50;
};

class Mismatch : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

json int_json(const Int& v) { return v.fits_slong_p() ? json(v.get_si()) : json(v.get_str()); }

json vec_json(const IntVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(int_json(x));
    return a;
}

json lattice_json(const Lattice& l) {
    json a = json::array();
    for (const auto& row : l.basis()) a.push_back(vec_json(row));
    return a;
}

std::string list_string(const IntVec& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ']';
    return os.str();
}

std::string group_list(const FactorGroup& g) {
    IntVec all = g.factors;
    all.insert(all.end(), g.free_rank, Int(0));
    return list_string(all);
}

// sum_f d_f q_f, with q for a single factor.
std::string killing_string(const IntVec& d) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t f = 0; f < d.size(); ++f) {
        if (d[f] == 0) continue;
        Int c = d[f];
        if (c < 0) {
            os << (first ? "-" : " - ");
            c = -c;
        } else if (!first) {
            os << " + ";
        }
        if (c != 1) os << c.get_str();
        os << 'q';
        if (d.size() > 1) os << f + 1;
        first = false;
    }
    return first ? "0" : os.str();
}

std::string presentation(const std::vector<QuotientGenerator>& gens) {
    if (gens.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        os << (i ? " + " : "") << (gens[i].order == 0 ? std::string("Z") : "Z/" + gens[i].order.get_str()) << " ("
           << killing_string(gens[i].element) << ')';
    }
    return os.str();
}

json presentation_json(const std::vector<QuotientGenerator>& gens) {
    json a = json::array();
    for (const auto& g : gens) a.push_back({{"order", int_json(g.order)}, {"element", killing_string(g.element)}});
    return a;
}

DecMode dec_mode(const std::string& mode) {
    if (mode == "enumerate") return DecMode::Enumerate;
    if (mode == "table") return DecMode::Table;
    return DecMode::Both;
}

SdecMode sdec_mode(const std::string& mode) {
    if (mode == "generators") return SdecMode::Generators;
    if (mode == "elements") return SdecMode::Elements;
    return SdecMode::Auto;
}

LatticeModel model_of(const Options& o) {
    if (o.spec.empty()) throw std::invalid_argument("--spec is required");
    return LatticeModel(parse_spec(o.spec));
}

std::string poly_lines(const PolyTuple& t, const std::string& indent) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.size(); ++i) os << indent << '[' << i + 1 << "] " << t[i].to_string() << '\n';
    return os.str();
}

json poly_array(const PolyTuple& t) {
    json a = json::array();
    for (const auto& p : t) a.push_back(p.to_string());
    return a;
}

int run_invariants(const Options& o) {
    LatticeModel m = model_of(o);
    DecOptions opt;
    opt.height = o.height;
    InvariantReport r = compute_invariants(m, dec_mode(o.mode), sdec_mode(o.mode), opt);
    std::string spec = format_spec(m.spec());

    if (o.as_json) {
        json j;
        j["spec"] = spec;
        json labels = json::array();
        for (const auto& f : m.spec().factors) labels.push_back(f.label());
        j["factors"] = labels;
        j["Q"] = {{"hnf", lattice_json(r.Q.lattice)}};
        j["Dec"] = {{"hnf", lattice_json(r.Dec.lattice)},
                    {"exactness", to_string(r.Dec.exactness)},
                    {"source", r.Dec.source}};
        j["Sdec"] = {{"hnf", lattice_json(r.Sdec.lattice)},
                     {"exactness", to_string(r.Sdec.exactness)},
                     {"mode", r.sdec_mode},
                     {"source", r.Sdec.source}};
        j["inv_ind"] = {{"factors", vec_json(r.inv_ind.factors)}};
        j["inv_sd"] = {{"factors", vec_json(r.inv_sd.factors)}};
        if (o.show_generators) {
            j["inv_ind"]["generators"] = presentation_json(quotient_generators(r.Dec.lattice, r.Q.lattice));
            j["inv_sd"]["generators"] = presentation_json(quotient_generators(r.Dec.lattice, r.Sdec.lattice));
        }
        std::cout << j.dump(2) << '\n';
    } else if (o.as_tsv) {
        std::cout << "spec\tQ\tDec\tDec_exactness\tSdec\tSdec_exactness\tinv_ind\tinv_sd\n"
                  << spec << '\t' << r.Q.lattice.to_string() << '\t' << r.Dec.lattice.to_string() << '\t'
                  << to_string(r.Dec.exactness) << '\t' << r.Sdec.lattice.to_string() << '\t'
                  << to_string(r.Sdec.exactness) << '\t' << group_list(r.inv_ind) << '\t' << group_list(r.inv_sd)
                  << '\n';
    } else {
        std::cout << "spec     " << spec << '\n'
                  << "Q        " << r.Q.lattice.to_string() << '\n'
                  << "Dec      " << r.Dec.lattice.to_string() << "  " << to_string(r.Dec.exactness) << "  "
                  << r.Dec.source << '\n'
                  << "Sdec     " << r.Sdec.lattice.to_string() << "  " << to_string(r.Sdec.exactness) << "  "
                  << r.Sdec.source << '\n';
        if (o.show_generators) {
            std::cout << "Inv_ind  " << presentation(quotient_generators(r.Dec.lattice, r.Q.lattice)) << '\n'
                      << "Inv_sd   " << presentation(quotient_generators(r.Dec.lattice, r.Sdec.lattice)) << '\n';
        } else {
            std::cout << "Inv_ind  " << r.inv_ind.to_string() << '\n' << "Inv_sd   " << r.inv_sd.to_string() << '\n';
        }
    }
    return 0;
}

GeneratorSet generator_set(const Options& o, const LatticeModel& m, const GcdChain& chain) {
    std::optional<Weight> lambda0;
    if (o.lambda0 != 0) {
        if (o.lambda0 < 1 || static_cast<std::size_t>(o.lambda0) > m.total_rank()) {
            throw std::invalid_argument("--lambda0 must name a fundamental weight 1.." +
                                        std::to_string(m.total_rank()));
        }
        lambda0 = m.fundamental_weight(static_cast<std::size_t>(o.lambda0 - 1));
    }
    return build_generators(m, chain, lambda0);
}

int run_generators(const Options& o) {
    LatticeModel m = model_of(o);
    GcdChain chain = gcd_chain(m);
    GeneratorSet gs = generator_set(o, m, chain);
    std::vector<long> order;
    for (auto k : chain.order) order.push_back(static_cast<long>(k) + 1);

    if (o.as_json) {
        json j;
        j["spec"] = format_spec(m.spec());
        j["chain"] = {{"order", order}, {"nprime", chain.nprime}, {"s", vec_json(chain.s)}, {"d", vec_json(chain.d)}};
        j["lambda0"] = gs.lambda0;
        json gens = json::array();
        for (const auto& g : gs.gens) {
            json e = {{"name", g.name()}, {"value", g.value.to_string()}};
            if (o.dump_poly) e["expansion"] = poly_array(g.expansion);
            gens.push_back(e);
        }
        j["generators"] = gens;
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "spec     " << format_spec(m.spec()) << '\n' << "order   ";
    for (auto k : order) std::cout << ' ' << k;
    std::cout << "\ns        " << list_string(chain.s) << "\nd        " << list_string(chain.d) << "\nlambda0  [";
    for (std::size_t i = 0; i < gs.lambda0.size(); ++i) std::cout << (i ? ", " : "") << gs.lambda0[i];
    std::cout << "]\n";
    for (const auto& g : gs.gens) {
        std::cout << g.name() << "  " << g.value.to_string() << '\n';
        if (o.dump_poly) std::cout << poly_lines(g.expansion, "    ");
    }
    return 0;
}

PolyTuple read_tuple(const Options& o, std::size_t n) {
    std::vector<std::string> texts = o.polys;
    if (!o.input.empty()) {
        std::ifstream in(o.input);
        if (!in) throw std::invalid_argument("cannot open " + o.input);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error& e) {
            throw std::invalid_argument(o.input + ": " + e.what());
        }
        if (!j.is_array()) throw std::invalid_argument(o.input + ": expected a JSON array of polynomial strings");
        for (const auto& s : j) {
            if (!s.is_string()) throw std::invalid_argument(o.input + ": entries must be strings");
            texts.push_back(s.get<std::string>());
        }
    }
    if (texts.size() != n) {
        throw std::invalid_argument("expected " + std::to_string(n) + " polynomials, got " + std::to_string(texts.size()));
    }
    PolyTuple f;
    for (const auto& t : texts) f.push_back(LaurentPoly::parse(t, n));
    return f;
}

int run_reduce(const Options& o) {
    LatticeModel m = model_of(o);
    GcdChain chain = gcd_chain(m);
    GeneratorSet gs = generator_set(o, m, chain);
    PolyTuple f = read_tuple(o, m.total_rank());
    Reduction r = reduce_to_generators(m, chain, gs, f);
    if (expand_combination(gs, r.coefficients) != r.element) throw Mismatch("combination does not expand to the input");

    if (o.as_json) {
        json j;
        j["spec"] = format_spec(m.spec());
        j["element"] = r.element.to_string();
        json c = json::object();
        for (std::size_t k = 0; k < gs.gens.size(); ++k) c[gs.gens[k].name()] = r.coefficients[k].to_string();
        j["coefficients"] = c;
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "element  " << r.element.to_string() << '\n';
    for (std::size_t k = 0; k < gs.gens.size(); ++k) {
        if (!r.coefficients[k].is_zero()) std::cout << gs.gens[k].name() << "  " << r.coefficients[k].to_string() << '\n';
    }
    return 0;
}

int run_verify_flatness(const Options& o) {
    CoefficientRing ring(o.modulus);
    NewtonTransform t;
    std::string label;
    if (!o.spec.empty()) {
        LatticeModel m = model_of(o);
        t = newton_transform(m, ring);
        label = format_spec(m.spec());
    } else {
        if (o.rank < 1) throw std::invalid_argument("give --spec or --type with --rank");
        SimpleFactor f;
        f.rank = o.rank;
        if (o.type == "A") {
            f.type = DynkinType::A;
        } else if (o.type == "C") {
            f.type = DynkinType::C;
        } else {
            throw std::invalid_argument("--type must be A or C");
        }
        t = newton_transform(f, ring);
        label = f.label();
    }
    FlatnessReport rep = check_flatness(t.flat);
    bool unit = is_unit_monomial(t.det);
    bool consistent = row_times_matrix(t.rho, t.A) == t.flat;

    if (o.as_json) {
        json j = {{"group", label},
                  {"modulus", o.modulus},
                  {"flat", poly_array(t.flat)},
                  {"det", t.det.to_string()},
                  {"is_flat", rep.flat},
                  {"det_unit", unit},
                  {"rho_times_A", consistent},
                  {"diagnostics", rep.diagnostics}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "group    " << label << '\n';
        if (o.modulus != 0) std::cout << "modulus  " << o.modulus << '\n';
        std::cout << "flat tuple\n" << poly_lines(t.flat, "  ") << "det      " << t.det.to_string() << '\n'
                  << "flat     " << (rep.flat ? "yes" : "no") << '\n'
                  << "det unit " << (unit ? "yes" : "no") << '\n';
        for (const auto& d : rep.diagnostics) std::cout << "  " << d << '\n';
    }
    return rep.flat && unit && consistent ? 0 : 2;
}

int run_fuzz_syzygy(const Options& o) {
    RandomSource g(o.seed);
    static const std::vector<long> moduli = {0, 2, 6, 16};
    std::optional<LatticeModel> m;
    if (!o.spec.empty()) m.emplace(model_of(o));
    std::map<std::string, int> passed;
    std::vector<std::string> failures;
    for (int c = 0; c < o.cases; ++c) {
        long d = o.modulus != 0 ? o.modulus : g.pick(moduli);
        CoefficientRing ring(d);
        std::string key;
        bool ok = true;
        if (m) {
            NewtonTransform t = newton_transform(*m, ring);
            PolyTuple rho;
            for (std::size_t i = 0; i < m->total_rank(); ++i) rho.push_back(m->rho_aug(i, ring));
            PolyTuple f = expand_certificate(random_certificate(g, rho.size(), rho.size(), ring, -1, 1), rho);
            ok = expand_certificate(trivialize_rho_syzygy(t, f), rho) == f;
            key = "rho";
        } else {
            std::size_t rank = static_cast<std::size_t>(g.range(2, 4));
            std::size_t len = static_cast<std::size_t>(g.range(1, static_cast<long>(rank)));
            PolyTuple t = random_flat_tuple(g, len, rank, ring, true);
            PolyTuple f = expand_certificate(random_certificate(g, len, rank, ring), t);
            SyzygyCertificate cert = trivialize_syzygy(t, f);
            ok = expand_certificate(cert, t) == f;
            if (ok && d != 0) ok = reduce_certificate(lift_syzygy(cert), d) == cert;
            key = "flat rank " + std::to_string(rank);
        }
        key += d == 0 ? " over Z" : " over Z/" + std::to_string(d);
        if (ok) {
            ++passed[key];
        } else {
            failures.push_back("case " + std::to_string(c) + ": " + key);
        }
    }
    if (o.as_json) {
        json j = {{"cases", o.cases}, {"seed", o.seed}, {"passed", passed}, {"failures", failures}};
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& [k, n] : passed) std::cout << k << "  " << n << " ok\n";
        for (const auto& f : failures) std::cout << "FAIL " << f << '\n';
        std::cout << "cases " << o.cases << "  failures " << failures.size() << '\n';
    }
    return failures.empty() ? 0 : 2;
}

std::string closed_group(const std::optional<FactorGroup>& g, const std::optional<Int>& order) {
    if (g) return group_list(*g);
    if (order) return "order " + order->get_str();
    return "-";
}

bool agrees(const FactorGroup& computed, const std::optional<FactorGroup>& g, const std::optional<Int>& order) {
    if (g) return computed == *g;
    if (order) return computed.order() == *order;
    return true;
}

int run_table(const Options& o) {
    if (o.family == "list") {
        for (const auto& f : table_families()) std::cout << f << '\n';
        return 0;
    }
    DecOptions opt;
    opt.height = o.height;
    json rows = json::array();
    bool all_ok = true;
    if (!o.as_json) std::cout << "spec\tQ\tDec\tSdec\tinv_ind\tinv_sd\tclosed_inv_ind\tclosed_inv_sd\tstatus\n";
    for (const auto& spec : table_specs(o.family, o.max_rank)) {
        LatticeModel m(spec);
        InvariantReport r = compute_invariants(m, dec_mode(o.mode), sdec_mode(o.mode), opt);
        std::optional<ClosedForm> cf = closed_form(m);
        std::optional<FactorGroup> ind, sd;
        std::optional<Int> ind_order, sd_order;
        if (cf) {
            ind = cf->inv_ind;
            sd = cf->inv_sd;
            ind_order = cf->inv_ind_order;
            sd_order = cf->inv_sd_order;
        }
        bool ok = agrees(r.inv_ind, ind, ind_order) && agrees(r.inv_sd, sd, sd_order);
        all_ok = all_ok && ok;
        std::string text = format_spec(spec);
        if (o.as_json) {
            rows.push_back({{"spec", text},
                            {"Q", lattice_json(r.Q.lattice)},
                            {"Dec", lattice_json(r.Dec.lattice)},
                            {"Sdec", lattice_json(r.Sdec.lattice)},
                            {"inv_ind", vec_json(r.inv_ind.factors)},
                            {"inv_sd", vec_json(r.inv_sd.factors)},
                            {"closed_inv_ind", closed_group(ind, ind_order)},
                            {"closed_inv_sd", closed_group(sd, sd_order)},
                            {"status", ok ? "ok" : "mismatch"}});
        } else {
            std::cout << text << '\t' << r.Q.lattice.to_string() << '\t' << r.Dec.lattice.to_string() << '\t'
                      << r.Sdec.lattice.to_string() << '\t' << group_list(r.inv_ind) << '\t' << group_list(r.inv_sd)
                      << '\t' << closed_group(ind, ind_order) << '\t' << closed_group(sd, sd_order) << '\t'
                      << (ok ? "ok" : "mismatch") << '\n';
        }
    }
    if (o.as_json) std::cout << json{{"family", o.family}, {"max_rank", o.max_rank}, {"rows", rows}}.dump(2) << '\n';
    return all_ok ? 0 : 2;
}

int run_pgo8_check(const Options& o) {
    LatticeModel m = pgo8_model();
    QuotientRing mod4(pgo8_sublattice(), 4);
    QuotientRing mod16(m.tstar(), 16);
    std::vector<std::string> r4, r16;
    for (std::size_t i = 0; i < 4; ++i) {
        r4.push_back(mod4.to_string(mod4.reduce(m.rho_aug(i))));
        r16.push_back(mod16.to_string(mod16.reduce(m.rho_aug(i))));
    }
    int in_tstar = 0, holds = 0;
    for (const auto& f : pgo8_sample_tuples(static_cast<std::size_t>(o.tuples), o.seed)) {
        ParityReport p = pgo8_parity_check(f);
        in_tstar += p.in_tstar;
        holds += p.in_tstar && p.claim_holds;
    }
    InvariantReport r = compute_invariants(m);
    bool ok = in_tstar == o.tuples && holds == o.tuples && r.Dec.lattice == r.Sdec.lattice;

    if (o.as_json) {
        json j = {{"mod4", r4},       {"mod16", r16},
                  {"tuples", o.tuples}, {"in_tstar", in_tstar},
                  {"parity_holds", holds}, {"Dec", lattice_json(r.Dec.lattice)},
                  {"Sdec", lattice_json(r.Sdec.lattice)}, {"inv_ind", vec_json(r.inv_ind.factors)},
                  {"inv_sd", vec_json(r.inv_sd.factors)}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "(Z/4)[Lambda/Lambda']\n";
        for (std::size_t i = 0; i < 4; ++i) std::cout << "  rho_" << i + 1 << " -> " << r4[i] << '\n';
        std::cout << "(Z/16)[Lambda/T*]\n";
        for (std::size_t i = 0; i < 4; ++i) std::cout << "  rho_" << i + 1 << " -> " << r16[i] << '\n';
        std::cout << "tuples   " << o.tuples << "  in Z[T*] " << in_tstar << "  parity " << holds << '\n'
                  << "Dec      " << r.Dec.lattice.to_string() << '\n'
                  << "Sdec     " << r.Sdec.lattice.to_string() << '\n'
                  << "Inv_ind  " << r.inv_ind.to_string() << '\n'
                  << "Inv_sd   " << r.inv_sd.to_string() << '\n';
    }
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degree-3 invariants of semisimple groups from Laurent polynomial syzygies"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> modes = {"enumerate", "table", "both", "generators", "elements"};

    auto add_spec = [&](CLI::App* c, bool required) {
        auto* opt = c->add_option("--spec", o.spec, "group, e.g. \"(SL(8) x SL(8)) / mu(2)\"");
        if (required) opt->required();
    };
    auto add_format = [&](CLI::App* c) {
        auto* j = c->add_flag("--json", o.as_json, "JSON output");
        c->add_flag("--tsv", o.as_tsv, "TSV output")->excludes(j);
    };
    auto add_compute = [&](CLI::App* c) {
        c->add_option("--height", o.height, "dominant box bound for Dec enumeration")->check(CLI::Range(0, 64));
        c->add_option("--mode", o.mode, "enumerate, table, both (Dec) or generators, elements (Sdec)")
            ->check(CLI::IsMember(modes));
        c->add_option("--seed", o.seed, "random seed");
    };

    auto* inv = app.add_subcommand("invariants", "Q, Dec, Sdec and the invariant groups");
    add_spec(inv, true);
    add_format(inv);
    add_compute(inv);
    inv->add_flag("--show-generators", o.show_generators, "present the groups by generators in the q_i");

    auto* gen = app.add_subcommand("generators", "generator set of an index-2 group");
    add_spec(gen, true);
    gen->add_flag("--json", o.as_json, "JSON output");
    gen->add_option("--lambda0", o.lambda0, "1-based index of the fundamental weight used as lambda0");
    gen->add_flag("--dump-poly", o.dump_poly, "also print each generator's expansion against the rho_i");

    auto* red = app.add_subcommand("reduce", "express sum f_i rho_i through the generators");
    add_spec(red, true);
    red->add_flag("--json", o.as_json, "JSON output");
    red->add_option("--lambda0", o.lambda0, "1-based index of the fundamental weight used as lambda0");
    auto* input = red->add_option("--input", o.input, "JSON array of polynomial strings f_i")->check(CLI::ExistingFile);
    red->add_option("--poly", o.polys, "polynomial f_i, repeated once per fundamental weight")->excludes(input);

    auto* flat = app.add_subcommand("verify-flatness", "check the Newton transform of a type A or C group");
    add_spec(flat, false);
    flat->add_option("--type", o.type, "A or C");
    flat->add_option("--rank", o.rank, "rank of the simple factor");
    flat->add_option("--modulus", o.modulus, "coefficient ring Z/modulus (0 for Z)")->check(CLI::NonNegativeNumber);
    flat->add_flag("--json", o.as_json, "JSON output");

    auto* fuzz = app.add_subcommand("fuzz-syzygy", "round-trip random trivial syzygies");
    add_spec(fuzz, false);
    fuzz->add_option("--cases", o.cases, "number of cases")->check(CLI::NonNegativeNumber);
    fuzz->add_option("--seed", o.seed, "random seed");
    fuzz->add_option("--modulus", o.modulus, "fix the coefficient ring Z/modulus")->check(CLI::NonNegativeNumber);
    fuzz->add_flag("--json", o.as_json, "JSON output");

    auto* table = app.add_subcommand("table", "computed groups against the closed forms of a family");
    table->add_option("--family", o.family, "family name, or list")->required();
    table->add_option("--max-rank", o.max_rank, "bound on the total rank")->check(CLI::Range(1, 64));
    table->add_flag("--json", o.as_json, "JSON output");
    add_compute(table);

    auto* pgo = app.add_subcommand("pgo8-check", "quotient reductions and parity checks for PGO(8)");
    pgo->add_option("--tuples", o.tuples, "number of sampled tuples")->check(CLI::NonNegativeNumber);
    pgo->add_option("--seed", o.seed, "random seed");
    pgo->add_flag("--json", o.as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*inv) return run_invariants(o);
        if (*gen) return run_generators(o);
        if (*red) return run_reduce(o);
        if (*flat) return run_verify_flatness(o);
        if (*fuzz) return run_fuzz_syzygy(o);
        if (*table) return run_table(o);
        if (*pgo) return run_pgo8_check(o);
    } catch (const Mismatch& e) {
        std::cerr << "mismatch: " << e.what() << '\n';
        return 2;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal check failed: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        // Covers spec syntax errors, preconditions and ring mismatches.
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
