#include "zono/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "zono/eulerian.hpp"
#include "zono/oracle.hpp"
#include "zono/zonotope.hpp"

namespace zono::cli {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Serialization

json number(const Integer& z) {
    static const Integer limit = Integer(1) << 53;
    if (abs(z) <= limit) return static_cast<std::int64_t>(z);
    return to_string(z);
}

json number(const Rational& q) {
    if (is_integral(q)) return number(numerator(q));
    return to_string(q);
}

json numbers(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(number(q));
    return out;
}

json numbers(const std::vector<Integer>& v) {
    json out = json::array();
    for (const auto& z : v) out.push_back(number(z));
    return out;
}

json coefficients(const RatPolynomial& p) {
    if (p.is_zero()) return json::array({0});
    return numbers(p.coeffs());
}

json coefficients(const IntPolynomial& p) {
    if (p.is_zero()) return json::array({0});
    return numbers(p.coeffs());
}

json one_based(const IndexSet& s) {
    json out = json::array();
    for (auto i : s) out.push_back(i + 1);
    return out;
}

json one_based(const std::vector<IndexSet>& sets) {
    json out = json::array();
    for (const auto& s : sets) out.push_back(one_based(s));
    return out;
}

std::string key_of(const IndexSet& s) { return one_based(s).dump(); }

std::string mode_name(ZonotopeMode mode) { return mode == ZonotopeMode::typeB ? "typeB" : "standard"; }

// ---------------------------------------------------------------------------
// Input

struct Input {
    std::string path;
    ZonotopeSpec zonotope;
    std::optional<BoxValuationTable> user_table;  // entries as given, 0-based keys
};

[[noreturn]] void invalid(const std::string& message) { throw MathError("InvalidInput", message); }

Rational parse_value(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    invalid("box_table values must be integers or strings \"p/q\"");
}

Input load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MathError("InputNotReadable", "cannot open input file " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        invalid(std::string("input is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) invalid("input must be a JSON object");
    if (!doc.contains("generators") || !doc["generators"].is_array()) invalid("\"generators\" must be an array");

    std::vector<std::vector<std::int64_t>> vectors;
    for (const auto& v : doc["generators"]) {
        if (!v.is_array()) invalid("every generator must be an array of integers");
        std::vector<std::int64_t> row;
        for (const auto& x : v) {
            if (!x.is_number_integer()) invalid("generator entries must be integers");
            const auto value = x.get<std::int64_t>();
            if (value > (std::int64_t{1} << 31) || value < -(std::int64_t{1} << 31))
                invalid("generator entries must have magnitude at most 2^31");
            row.push_back(value);
        }
        vectors.push_back(std::move(row));
    }
    std::size_t dim = vectors.empty() ? 0 : vectors.front().size();
    if (doc.contains("dimension")) {
        if (!doc["dimension"].is_number_unsigned()) invalid("\"dimension\" must be a nonnegative integer");
        dim = doc["dimension"].get<std::size_t>();
    }

    ZonotopeMode mode = ZonotopeMode::standard;
    if (doc.contains("mode")) {
        const auto& m = doc["mode"];
        if (m == "standard")
            mode = ZonotopeMode::standard;
        else if (m == "typeB")
            mode = ZonotopeMode::typeB;
        else
            invalid("\"mode\" must be \"standard\" or \"typeB\"");
    }

    Input input{path, ZonotopeSpec{VectorConfiguration(dim, std::move(vectors)), mode}, std::nullopt};
    if (doc.contains("box_table")) {
        const auto& table = doc["box_table"];
        if (!table.is_object()) invalid("\"box_table\" must be an object");
        BoxValuationTable t;
        const std::size_t n = input.zonotope.generators.size();
        for (const auto& [key, value] : table.items()) {
            json indices;
            try {
                indices = json::parse(key);
            } catch (const json::parse_error&) {
                invalid("box_table key " + key + " is not a JSON array");
            }
            if (!indices.is_array()) invalid("box_table key " + key + " is not a JSON array");
            std::vector<std::size_t> items;
            for (const auto& i : indices) {
                if (!i.is_number_integer() || i.get<std::int64_t>() < 1 || i.get<std::int64_t>() > static_cast<std::int64_t>(n))
                    throw MathError("IndexOutOfRange", "box_table key " + key + " has an index outside 1.." + std::to_string(n));
                items.push_back(i.get<std::size_t>() - 1);
            }
            t.set(IndexSet(std::move(items)), parse_value(value));
        }
        t.validate_against(Matroid(input.zonotope.generators));
        input.user_table = std::move(t);
    }
    return input;
}

/// Default lattice-count table with user entries replacing the defaults.
BoxValuationTable effective_table(const Input& input, const Matroid& m) {
    BoxValuationTable t = default_box_table(m);
    if (input.user_table)
        for (const auto& [k, v] : input.user_table->entries()) t.set(k, v);
    return t;
}

json request(const std::string& command, const Input& input) {
    json r;
    r["command"] = command;
    r["file"] = input.path;
    r["mode"] = mode_name(input.zonotope.mode);
    r["dimension"] = input.zonotope.generators.dimension();
    json gens = json::array();
    for (const auto& v : input.zonotope.generators.vectors()) gens.push_back(v);
    r["generators"] = gens;
    r["custom_box_table"] = input.user_table.has_value();
    return r;
}

void require_lattice_count(const Input& input, const std::string& method) {
    if (input.user_table && method != "formula")
        throw MathError("UnsupportedMethod", "the oracle counts lattice points only; a custom box_table needs --method formula");
}

// ---------------------------------------------------------------------------
// Commands

json cmd_ehrhart(const std::string& path, const std::string& method) {
    const Input input = load_input(path);
    require_lattice_count(input, method);
    json out;
    json req = request("ehrhart", input);
    req["method"] = method;
    out["request"] = req;
    const Matroid m(input.zonotope.generators);
    std::optional<RatPolynomial> formula, oracle;
    if (method != "oracle") formula = ehrhart_zonotope(input.zonotope, effective_table(input, m));
    if (method != "formula") oracle = ehrhart_via_oracle(input.zonotope);
    if (formula && oracle && *formula != *oracle)
        throw DisagreementError("MethodDisagreement", "formula and oracle Ehrhart polynomials differ");
    out["rank"] = m.rank();
    out["ehrhart"] = coefficients(formula ? *formula : *oracle);
    if (method == "both") out["agree"] = true;
    return out;
}

json cmd_hstar(const std::string& path, const std::string& method, bool diagnostics) {
    const Input input = load_input(path);
    require_lattice_count(input, method);
    const auto& z = input.zonotope;
    const int d = static_cast<int>(z.generators.dimension());
    json out;
    json req = request("hstar", input);
    req["method"] = method;
    req["diagnostics"] = diagnostics;
    out["request"] = req;

    const Matroid m(z.generators);
    std::optional<HStarBreakdown> breakdown;
    std::optional<BoxValuationTable> table;
    std::optional<HStarVector> oracle;
    if (method != "oracle") {
        table = effective_table(input, m);
        breakdown = hstar_breakdown(z, *table);
    }
    if (method != "formula") oracle = hstar_via_oracle(z);
    if (breakdown && oracle && !(breakdown->hstar == *oracle))
        throw DisagreementError("MethodDisagreement", "formula and oracle h*-vectors differ");
    const HStarVector& h = breakdown ? breakdown->hstar : *oracle;

    out["degree"] = d;
    out["hstar"] = numbers(h.coefficients());
    out["family"] = z.mode == ZonotopeMode::typeB ? "B" : "A";
    if (breakdown)
        out["c"] = numbers(breakdown->multiplicities);
    else if (z.mode == ZonotopeMode::standard)
        out["c"] = numbers(express_in_A_basis(h));
    if (method == "both") out["agree"] = true;

    if (diagnostics) {
        json diag;
        diag["rank"] = m.rank();
        diag["coloop_free"] = m.is_coloop_free();
        if (breakdown) {
            diag["bases"] = one_based(breakdown->bases);
            diag["internally_passive"] = one_based(breakdown->passive);
            json bt;
            for (const auto& s : m.independent_sets()) bt[key_of(s)] = number(table->at(s));
            diag["box_table"] = bt;
            diag["multiplicities"] = numbers(breakdown->multiplicities);
        } else {
            diag["bases"] = one_based(m.bases());
            json ip = json::array();
            for (const auto& b : m.bases()) ip.push_back(one_based(m.internally_passive(b)));
            diag["internally_passive"] = ip;
        }
        if (z.mode == ZonotopeMode::standard) diag["c_vector"] = numbers(express_in_A_basis(h));
        out["diagnostics"] = diag;
    }
    return out;
}

const std::vector<std::string> kProperties = {"real-rooted", "unimodal", "alt-inc", "palindromic", "reflexive", "cone"};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream stream(s);
    std::string item;
    while (std::getline(stream, item, sep))
        if (!item.empty()) parts.push_back(item);
    return parts;
}

json verdicts(const HStarVector& h, const std::vector<std::string>& properties) {
    json v;
    for (const auto& p : properties) {
        json entry;
        if (p == "real-rooted") {
            entry["value"] = is_real_rooted(h.polynomial());
        } else if (p == "unimodal") {
            const auto u = is_unimodal(h);
            entry["value"] = u.unimodal;
            if (u.unimodal) entry["peaks"] = u.peaks;
            if (u.valley) entry["valley"] = *u.valley;
        } else if (p == "alt-inc") {
            const auto w = alternating_violation(h.coefficients());
            entry["value"] = !w.has_value();
            if (w) entry["violation"] = {{"greater", w->first}, {"smaller", w->second}};
        } else if (p == "palindromic") {
            entry["value"] = is_palindromic(h);
            for (int i = 0; i <= h.degree(); ++i)
                if (h[i] != h[h.degree() - i]) {
                    entry["mismatch"] = i;
                    break;
                }
        } else if (p == "reflexive") {
            entry["value"] = is_reflexive_by_ehrhart(ehrhart_from_hstar(h), h.degree());
        } else if (p == "cone") {
            const auto c = express_in_A_basis(h);
            entry["value"] = is_in_zonotope_cone(h);
            entry["c"] = numbers(c);
        }
        v[p] = entry;
    }
    return v;
}

json cmd_check(const std::string& path, const std::string& literal, std::optional<int> degree,
               const std::string& property_list) {
    std::vector<std::string> properties = property_list.empty() ? kProperties : split(property_list, ',');
    for (const auto& p : properties)
        if (std::find(kProperties.begin(), kProperties.end(), p) == kProperties.end())
            throw MathError("UnknownProperty", "unknown property " + p);

    json out;
    json req;
    req["command"] = "check";
    std::optional<HStarVector> h;
    if (!path.empty()) {
        const Input input = load_input(path);
        req = request("check", input);
        h = hstar(input.zonotope, effective_table(input, Matroid(input.zonotope.generators)));
    } else {
        std::vector<Rational> values;
        for (const auto& part : split(literal, ',')) values.push_back(parse_rational(part));
        if (values.empty()) throw MathError("EmptyVector", "--hstar needs at least one coefficient");
        const int d = degree.value_or(static_cast<int>(values.size()) - 1);
        if (d + 1 < static_cast<int>(values.size()))
            throw MathError("DegreeTooLarge", "more coefficients than degree + 1");
        values.resize(static_cast<std::size_t>(d) + 1, Rational(0));
        req["hstar"] = numbers(values);
        h = HStarVector(std::move(values), d);
    }
    req["properties"] = properties;
    out["request"] = req;
    out["degree"] = h->degree();
    out["hstar"] = numbers(h->coefficients());
    out["verdicts"] = verdicts(*h, properties);
    return out;
}

json cmd_eulerian(const std::string& family, int d, std::optional<int> index, std::string method) {
    if (d < 1) throw MathError("IndexOutOfRange", "--d must be at least 1");
    if (index && (*index < 1 || *index > d)) throw MathError("IndexOutOfRange", "--index must lie in 1..d");
    IntPolynomial p;
    if (family == "A") {
        if (method.empty()) method = "recurrence";
        if (method == "identity") throw MathError("UnsupportedMethod", "type A has no identity path; use enumerate or recurrence");
        if (index)
            p = method == "enumerate" ? a_j_polynomial_enumerate(d, *index) : a_j_polynomial(d, *index);
        else
            p = method == "enumerate" ? eulerian_A_enumerate(d) : eulerian_A(d);
    } else {
        if (method.empty()) method = index ? "identity" : "enumerate";
        if (method == "recurrence") throw MathError("UnsupportedMethod", "type B has no recurrence path; use enumerate or identity");
        if (index)
            p = method == "enumerate" ? b_l_polynomial_enumerate(d, *index) : b_l_polynomial_via_A(d - 1, *index - 1);
        else if (method == "enumerate")
            p = eulerian_B(d);
        else
            throw MathError("UnsupportedMethod", "the full type-B polynomial is available by enumeration only");
    }
    json out;
    json req;
    req["command"] = "eulerian";
    req["family"] = family;
    req["d"] = d;
    if (index) req["index"] = *index;
    req["method"] = method;
    out["request"] = req;
    out["coefficients"] = coefficients(p);
    return out;
}

json cmd_matroid(const std::string& path, bool reverse) {
    const Input input = load_input(path);
    const Matroid m(input.zonotope.generators, reverse ? ElementOrder::reversed : ElementOrder::natural);
    json out;
    json req = request("matroid", input);
    req["order"] = reverse ? "reversed" : "natural";
    out["request"] = req;
    out["rank"] = m.rank();
    out["independent_sets"] = one_based(m.independent_sets());
    out["bases"] = one_based(m.bases());
    json ip = json::array();
    for (const auto& b : m.bases()) ip.push_back(one_based(m.internally_passive(b)));
    out["internally_passive"] = ip;
    out["coloop_free"] = m.is_coloop_free();
    if (m.rank() == 0) out["note"] = "rank 0: the empty set is the only basis";
    return out;
}

std::string error_document(const std::string& code, const std::string& message, int exit_code) {
    json e;
    e["code"] = code;
    e["message"] = message;
    e["exit_code"] = exit_code;
    return e.dump() + "\n";
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
    CLI::App app{"Ehrhart and h*-polynomials of lattice zonotopes", "zonotope"};
    app.require_subcommand(1);
    const std::vector<std::string> methods = {"formula", "oracle", "both"};

    std::string file, method = "formula", literal, properties, family, eulerian_method;
    bool diagnostics = false, reverse = false;
    int degree = -1, dim = 0, index = 0;

    auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial of the zonotope in FILE");
    ehrhart->add_option("file", file, "input JSON file")->required();
    ehrhart->add_option("--method", method, "formula, oracle or both")->check(CLI::IsMember(methods));

    auto* hstar_cmd = app.add_subcommand("hstar", "h*-polynomial of the zonotope in FILE");
    hstar_cmd->add_option("file", file, "input JSON file")->required();
    hstar_cmd->add_option("--method", method, "formula, oracle or both")->check(CLI::IsMember(methods));
    hstar_cmd->add_flag("--diagnostics", diagnostics, "bases, internally passive sets, box table, multiplicities");

    auto* check = app.add_subcommand("check", "shape properties of an h*-vector");
    auto* check_file = check->add_option("file", file, "input JSON file");
    auto* check_h = check->add_option("--hstar", literal, "comma-separated coefficients, e.g. 1,4,1");
    check_file->excludes(check_h);
    check->add_option("--degree", degree, "ambient degree (defaults to length - 1)")->check(CLI::NonNegativeNumber);
    check->add_option("--properties", properties,
                      "comma-separated subset of real-rooted,unimodal,alt-inc,palindromic,reflexive,cone");

    auto* eulerian = app.add_subcommand("eulerian", "refined Eulerian polynomials");
    eulerian->add_option("--family", family, "A or B")->required()->check(CLI::IsMember({"A", "B"}));
    eulerian->add_option("--d", dim, "d")->required();
    auto* index_opt = eulerian->add_option("--index", index, "j for A_j(d,t) or l for B_l(d,t)");
    eulerian->add_option("--method", eulerian_method, "enumerate, recurrence or identity")
        ->check(CLI::IsMember({"enumerate", "recurrence", "identity"}));

    auto* matroid = app.add_subcommand("matroid", "bases and internally passive sets of the configuration in FILE");
    matroid->add_option("file", file, "input JSON file")->required();
    matroid->add_flag("--reverse", reverse, "use the reversed element order");

    Outcome result;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream out, err;
        result.exit_code = app.exit(e, out, err);
        result.out = out.str();
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = kExitMath;
        result.err = error_document("UsageError", e.what(), kExitMath);
        return result;
    }

    try {
        json out;
        if (ehrhart->parsed()) {
            out = cmd_ehrhart(file, method);
        } else if (hstar_cmd->parsed()) {
            out = cmd_hstar(file, method, diagnostics);
        } else if (check->parsed()) {
            if (file.empty() && literal.empty()) throw MathError("InvalidInput", "check needs FILE or --hstar");
            out = cmd_check(file, literal, degree >= 0 ? std::optional<int>(degree) : std::nullopt, properties);
        } else if (eulerian->parsed()) {
            out = cmd_eulerian(family, dim, index_opt->count() ? std::optional<int>(index) : std::nullopt,
                               eulerian_method);
        } else {
            out = cmd_matroid(file, reverse);
        }
        result.out = out.dump(2) + "\n";
    } catch (const ResourceError& e) {
        result.exit_code = kExitResource;
        result.err = error_document(e.code(), e.what(), kExitResource);
    } catch (const DisagreementError& e) {
        result.exit_code = kExitDisagreement;
        result.err = error_document(e.code(), e.what(), kExitDisagreement);
    } catch (const Error& e) {
        result.exit_code = kExitMath;
        result.err = error_document(e.code(), e.what(), kExitMath);
    } catch (const json::exception& e) {
        result.exit_code = kExitMath;
        result.err = error_document("InvalidInput", e.what(), kExitMath);
    } catch (const std::exception& e) {
        result.exit_code = kExitDisagreement;
        result.err = error_document("InternalError", e.what(), kExitDisagreement);
    }
    return result;
}

}  // namespace zono::cli
