#include "qf2/cli.hpp"

#include "qf2/acceptance.hpp"
#include "qf2/batyrev.hpp"
#include "qf2/json_io.hpp"
#include "qf2/losev_manin.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

namespace qf2 {

namespace {

enum class Format { text, json };

struct Config {
    int order = 8;
    int d_max = 8;
    std::string format = "text";
    std::string fan_path;
    std::string family;
    std::string method = "closed";
    bool show_loci = false;
    bool check_iso = false;
    int b = 0;
    std::string lambda;
    std::string psi = "0,0";

    Format fmt() const { return format == "json" ? Format::json : Format::text; }
};

constexpr int kOk = 0, kFailed = 1, kInput = 2;

std::vector<Family> families(const Config& c)
{
    if (c.family.empty()) return {Family::dD4, Family::D2_plus_dD4};
    return {parse_family(c.family)};
}

std::vector<Method> methods(const Config& c)
{
    if (c.method == "both") return {Method::closed, Method::assembled};
    return {parse_method(c.method)};
}

int first_degree(Family f) { return f == Family::dD4 ? 1 : 0; }

std::string vec_str(const std::vector<int>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

int print_report(const Report& r, const Config& c, std::ostream& out)
{
    if (c.fmt() == Format::json) {
        out << to_json(r).dump(2) << "\n";
    } else {
        for (const auto& l : r.lines) out << l << "\n";
        out << (r.ok ? "all checks passed" : "verification FAILED") << "\n";
    }
    return r.ok ? kOk : kFailed;
}

int cmd_fan(const Config& c, std::ostream& out)
{
    const Fan fan = c.fan_path.empty() ? f2_fan() : load_fan(c.fan_path);
    const auto violations = validate_fan(fan);
    if (c.fmt() == Format::json) {
        out << fan_summary_json(fan).dump(2) << "\n";
        return violations.empty() ? kOk : kInput;
    }
    out << "rays:";
    for (const auto& r : fan.rays) out << " (" << r.x() << "," << r.y() << ")";
    out << "\nmax cones:";
    for (const auto& k : fan.max_cones) out << " {" << k[0] << "," << k[1] << "}";
    out << "\n";
    if (!violations.empty()) {
        for (const auto& v : violations) out << "invalid: " << v << "\n";
        return kInput;
    }
    out << "valid: smooth, complete\n";
    const ClassMatrix cm = class_matrix(fan);
    out << "class matrix (basis";
    for (int r : cm.basis_rays) out << " D" << r + 1;
    out << "):\n";
    for (int i = 0; i < cm.entries.rows(); ++i) {
        out << "  [";
        for (int j = 0; j < cm.entries.cols(); ++j) out << (j ? " " : "") << cm.entries(i, j);
        out << "]\n";
    }
    out << "primitive collections:\n";
    for (const auto& p : primitive_collections(fan)) {
        const auto full = primitive_relation(fan, p.rays, cm);
        out << "  {";
        for (std::size_t i = 0; i < p.rays.size(); ++i) out << (i ? ", " : "") << "rho" << p.rays[i] + 1;
        out << "}  relation " << vec_str(full.relation) << "  beta " << vec_str(full.beta) << "\n";
    }
    const BatyrevGenerators gens = batyrev_generators(fan, cm);
    const int n = static_cast<int>(fan.rays.size()), nb = static_cast<int>(cm.basis_rays.size());
    out << "linear generators:\n";
    for (const auto& l : gens.linear) out << "  " << linear_generator_poly(l, nb).str(cm.basis_rays) << "\n";
    out << "quantum Stanley-Reisner generators:\n";
    for (const auto& g : gens.quantum_sr) out << "  " << quantum_sr_poly(g, n, nb).str(cm.basis_rays) << "\n";
    out << "presentation: <";
    const auto pres = batyrev_presentation(fan, cm);
    for (std::size_t i = 0; i < pres.size(); ++i) out << (i ? ", " : "") << pres[i].str(cm.basis_rays);
    out << ">\n";
    return kOk;
}

std::string key_str(const InvariantKey& k)
{
    return "<" + to_string(k.first) + "," + to_string(k.second) + ">";
}

int cmd_invariants(const Config& c, std::ostream& out, std::ostream& err)
{
    const auto ms = methods(c);
    Json jf = Json::array();
    int status = kOk;
    for (Family f : families(c)) {
        const int a = f == Family::dD4 ? 0 : 1;
        Json rows = Json::array();
        for (int d = first_degree(f); d <= c.d_max; ++d) {
            std::vector<std::pair<InvariantKey, Rational>> vals;
            for (auto dv : {Insertion::D1, Insertion::D2, Insertion::D3, Insertion::D4}) {
                const InvariantKey k{a, d, dv, a == 0 ? Insertion::One : Insertion::Pt};
                const Rational v = localized_invariant(k, ms.front());
                for (Method m : ms)
                    if (localized_invariant(k, m) != v) {
                        err << to_string(f) << " d=" << d << " " << key_str(k) << ": methods disagree\n";
                        status = kFailed;
                    }
                vals.emplace_back(k, v);
            }
            if (c.fmt() == Format::text) {
                out << to_string(f) << "  d=" << d;
                for (const auto& [k, v] : vals) out << "  " << key_str(k) << " = " << to_string(v);
                out << "\n";
            }
            Json loci = Json::array();
            if (c.show_loci)
                for (Method m : ms)
                    for (const auto& ct : contributions(f, d, m)) {
                        if (c.fmt() == Format::text)
                            out << "    " << ct.graph.name() << "  " << to_string(m) << "  " << to_string(ct.value)
                                << "\n";
                        loci.push_back(to_json(ct));
                    }
            for (const auto& [k, v] : vals) {
                Json row = to_json(k);
                row["value"] = to_string(v);
                if (c.show_loci && (k.first == (a == 0 ? Insertion::D2 : Insertion::D1))) row["loci"] = loci;
                rows.push_back(row);
            }
        }
        jf.push_back({{"family", to_string(f)}, {"rows", rows}});
    }
    if (c.fmt() == Format::json) out << Json{{"d_max", c.d_max}, {"families", jf}}.dump(2) << "\n";
    return status;
}

int cmd_loci(const Config& c, std::ostream& out)
{
    Json all = Json::array();
    for (Family f : families(c))
        for (int d = first_degree(f); d <= c.d_max; ++d)
            for (Method m : methods(c)) {
                Rational total = 0;
                for (const auto& ct : contributions(f, d, m)) {
                    total += ct.value;
                    Json j = to_json(ct);
                    j["family"] = to_string(f);
                    j["d"] = d;
                    all.push_back(j);
                    if (c.fmt() == Format::text)
                        out << to_string(f) << "  d=" << d << "  " << ct.graph.name() << "  " << to_string(m) << "  "
                            << to_string(ct.value) << "\n";
                }
                if (c.fmt() == Format::text)
                    out << to_string(f) << "  d=" << d << "  total  " << to_string(m) << "  " << to_string(total)
                        << "\n";
            }
    if (c.fmt() == Format::json) out << Json{{"loci", all}}.dump(2) << "\n";
    return kOk;
}

int cmd_module_table(const Config& c, std::ostream& out)
{
    if (c.fmt() == Format::json) {
        out << module_table_json(c.order).dump(2) << "\n";
        return kOk;
    }
    for (Generator k : {Generator::sigma2, Generator::sigma4})
        for (int j = 0; j < 4; ++j)
            out << to_string(k) << " * " << basis_names()[j] << " = " << format_table_entry(k, j, c.order) << "\n";
    return kOk;
}

int cmd_verify(const Config& c, std::ostream& out)
{
    if (c.order < 1) throw std::invalid_argument("verify needs --order >= 1");
    Report all;
    auto merge = [&](const Report& r) {
        all.ok = all.ok && r.ok;
        all.lines.insert(all.lines.end(), r.lines.begin(), r.lines.end());
    };
    merge(verify_relations(c.d_max));
    merge(verify_table(c.order, InvariantSource::assembled));
    merge(verify_module_axiom(c.order, InvariantSource::assembled));
    merge(verify_quantum_relations(c.order, InvariantSource::assembled));
    merge(verify_isomorphism(c.order, InvariantSource::assembled));
    return print_report(all, c, out);
}

int cmd_batyrev(const Config& c, std::ostream& out)
{
    static const char* names[4] = {"1", "x2", "x4", "x2*x4"};
    const SeriesMatrix phi = phi_matrix(c.order);
    Json j = {{"order", c.order}};
    for (Generator k : {Generator::sigma2, Generator::sigma4}) {
        const SeriesMatrix m = bat_action_matrix(k, c.order);
        j[to_string(k)] = to_json(m);
        if (c.fmt() == Format::text)
            for (int col = 0; col < 4; ++col) {
                BatElement e;
                e.coeffs = m.col(col);
                out << (k == Generator::sigma2 ? "x2" : "x4") << " * " << names[col] << " = " << e.str() << "\n";
            }
    }
    j["phi"] = to_json(phi);
    if (c.fmt() == Format::text)
        for (int col = 0; col < 4; ++col) {
            SeriesVector v = phi.col(col);
            out << "phi(" << names[col] << ") = " << format_class(v) << "\n";
        }
    if (!c.check_iso) {
        if (c.fmt() == Format::json) out << j.dump(2) << "\n";
        return kOk;
    }
    const Report r = verify_isomorphism(c.order, InvariantSource::assembled);
    if (c.fmt() == Format::json) {
        j["isomorphism"] = to_json(r);
        out << j.dump(2) << "\n";
        return r.ok ? kOk : kFailed;
    }
    return print_report(r, c, out);
}

std::vector<int> parse_ints(const std::string& s, const std::string& what)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument(what + ": '" + s + "' is not a comma-separated integer list");
        }
    }
    return out;
}

int cmd_lm(const Config& c, std::ostream& out)
{
    if (c.b < 1 || c.b > 12) throw std::invalid_argument("lm-integrate: --b must be in 1..12");
    const Partition lambda = parse_partition(c.lambda);
    if (lambda.size() != c.b) throw std::invalid_argument("lm-integrate: lambda must be a partition of b");
    const auto psi = parse_ints(c.psi, "--psi");
    if (psi.size() != 2 || psi[0] < 0 || psi[1] < 0)
        throw std::invalid_argument("lm-integrate: --psi takes two non-negative exponents a,c");
    const auto cls = lm_d_lambda<Rational>(c.b, lambda) * LMClass<Rational>::psi(c.b, psi[0], psi[1]);
    const Rational v = cls.integrate();
    if (c.fmt() == Format::json)
        out << Json{{"b", c.b}, {"lambda", lambda.parts}, {"psi", psi}, {"value", to_string(v)}}.dump(2) << "\n";
    else
        out << to_string(v) << "\n";
    return kOk;
}

int cmd_selftest(const Config& c, std::ostream& out)
{
    const auto results = run_acceptance();
    bool ok = true;
    Json arr = Json::array();
    for (const auto& r : results) {
        ok = ok && r.pass;
        if (c.fmt() == Format::text) out << format_result(r) << "\n";
        arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"checks", r.checks},
                       {"failures", r.failures}});
    }
    if (c.fmt() == Format::json)
        out << Json{{"ok", ok}, {"criteria", arr}}.dump(2) << "\n";
    else
        out << (ok ? "selftest passed" : "selftest FAILED") << "\n";
    return ok ? kOk : kFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Config c;
    if (const char* env = std::getenv("QF2_ORDER")) {
        try {
            std::size_t used = 0;
            c.order = std::stoi(env, &used);
            if (used != std::string(env).size() || c.order < 0) throw std::invalid_argument(env);
        } catch (const std::exception&) {
            err << "error: QF2_ORDER must be a non-negative integer, got '" << env << "'\n";
            return kInput;
        }
    }
    CLI::App app{"Quasimap invariants and the quantum module of the Hirzebruch surface F2"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_order = [&](CLI::App* s) {
        s->add_option("--order", c.order, "Series truncation order (total q-degree); default $QF2_ORDER or 8")
            ->check(CLI::NonNegativeNumber);
    };
    auto add_dmax = [&](CLI::App* s) {
        s->add_option("--d-max", c.d_max, "Largest D4-degree")->check(CLI::Range(1, 40));
    };
    auto add_family = [&](CLI::App* s) {
        s->add_option("--family", c.family, "Curve class family")->check(CLI::IsMember({"dD4", "D2+dD4"}));
    };
    auto add_method = [&](CLI::App* s) {
        s->add_option("--method", c.method, "Per-locus values: closed forms, assembled factors, or both")
            ->check(CLI::IsMember({"closed", "assembled", "both"}));
    };

    auto* fan = app.add_subcommand("fan", "Validate a fan and print its Batyrev data");
    fan->add_option("--fan", c.fan_path, "Fan JSON file (default: F2)");
    add_format(fan);

    auto* inv = app.add_subcommand("invariants", "Two-point invariants by localization");
    add_family(inv);
    add_dmax(inv);
    add_method(inv);
    add_format(inv);
    inv->add_flag("--show-loci", c.show_loci, "Include per-locus contributions");

    auto* loci = app.add_subcommand("loci", "Per-locus localization contributions");
    add_family(loci);
    add_dmax(loci);
    add_method(loci);
    add_format(loci);

    auto* table = app.add_subcommand("module-table", "Quantum module table with f expanded");
    add_order(table);
    add_format(table);

    auto* verify = app.add_subcommand("verify", "Run all relation, table, module and isomorphism checks");
    add_order(verify);
    add_dmax(verify);
    add_format(verify);

    auto* bat = app.add_subcommand("batyrev", "Batyrev module action matrices and the isomorphism");
    add_order(bat);
    add_format(bat);
    bat->add_flag("--check-iso", c.check_iso, "Verify the isomorphism with the quantum module");

    auto* lm = app.add_subcommand("lm-integrate", "Integrate D_lambda psi^a psi'^c over the Losev-Manin space");
    lm->add_option("--b", c.b, "Number of light points")->required();
    lm->add_option("--lambda", c.lambda, "Partition of b, e.g. 2,1")->required();
    lm->add_option("--psi", c.psi, "Heavy psi exponents a,c");
    add_format(lm);

    auto* self = app.add_subcommand("selftest", "Run the acceptance suite");
    add_format(self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    }

    try {
        if (*fan) return cmd_fan(c, out);
        if (*inv) return cmd_invariants(c, out, err);
        if (*loci) return cmd_loci(c, out);
        if (*table) return cmd_module_table(c, out);
        if (*verify) return cmd_verify(c, out);
        if (*bat) return cmd_batyrev(c, out);
        if (*lm) return cmd_lm(c, out);
        if (*self) return cmd_selftest(c, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kInput;
}

}  // namespace qf2
