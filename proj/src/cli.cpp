#include "cremona/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <optional>
#include <json.hpp>
#include <sstream>

#include "cremona/dyn_degrees.hpp"
#include "cremona/errors.hpp"
#include "cremona/gln.hpp"
#include "cremona/monomial_map.hpp"
#include "cremona/sl2.hpp"

namespace cremona::cli {

namespace {

using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kNotConjugate = 3, kUndecided = 4, kCap = 5 };

json integer_value(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

json matrix_value(const IntMatrix& m) {
    json rows = json::array();
    for (const auto& r : m.rows()) {
        json row = json::array();
        for (const auto& e : r) row.push_back(integer_value(e));
        rows.push_back(std::move(row));
    }
    return rows;
}

json sequence_value(const std::vector<Integer>& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(integer_value(e));
    return a;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

IntMatrix matrix_text(const std::string& s) {
    if (!s.empty() && s[0] == '@') return parse_matrix(read_file(s.substr(1)));
    return parse_matrix(s);
}

struct Input {
    std::string text;
    enum Kind { kAuto, kMatrix, kMap } kind;
};

// Exponent matrix of a positional, --matrix or --map argument.
IntMatrix input_matrix(const Input& in) {
    const bool as_matrix =
        in.kind == Input::kMatrix || (in.kind == Input::kAuto && !in.text.empty() && (in.text[0] == '[' || in.text[0] == '@'));
    if (as_matrix) return matrix_text(in.text);
    return parse_map(in.text).matrix();
}

MonomialMap input_map(const Input& in) { return MonomialMap(input_matrix(in)); }

IntMatrix input_2x2(const Input& in) {
    IntMatrix m = input_matrix(in);
    if (m.dim() != 2) throw DomainError("this command needs a 2x2 matrix");
    return m;
}

std::vector<Integer> parse_sequence(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed sequence: ") + e.what(), e.byte);
    }
    if (!j.is_array() || j.empty()) throw ParseError("sequence must be a nonempty JSON array");
    std::vector<Integer> out;
    for (const auto& e : j) {
        if (e.is_number_integer()) out.emplace_back(e.get<long>());
        else if (e.is_string()) {
            Integer v;
            if (v.set_str(e.get<std::string>(), 10) != 0) throw ParseError("sequence entry is not an integer");
            out.push_back(v);
        } else
            throw ParseError("sequence entry is not an integer");
    }
    return out;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

Result error_result(int code, const std::string& kind, const std::string& message) {
    json j;
    j["error"] = message;
    j["kind"] = kind;
    return {code, dump(j)};
}

json lls_fields(const sl2::LLSPeriod& lls) {
    json j;
    j["lls"] = sequence_value(lls.entries());
    j["minimal_period"] = sequence_value(lls.minimal_period().entries());
    return j;
}

json classify_json(const IntMatrix& m) {
    const sl2::SpectrumClass c = sl2::classify(m);
    json j;
    j["class"] = sl2::class_name(c);
    if (const auto* a = std::get_if<sl2::ComplexSpectrum>(&c)) {
        j["representative"] = print_map(MonomialMap(a->representative));
        j["order"] = a->order;
    } else if (const auto* a = std::get_if<sl2::DoubleRoot>(&c)) {
        j["root_sign"] = a->root_sign;
        j["n"] = integer_value(a->n);
        IntMatrix rep = Integer(a->root_sign) * IntMatrix::identity(2);
        rep(0, 1) = a->n;
        j["representative"] = print_map(MonomialMap(rep));
    } else if (const auto* a = std::get_if<sl2::RealSpectrum>(&c)) {
        j["eig_sign"] = a->eig_sign;
        const json fields = lls_fields(a->lls);
        for (const auto& [k, v] : fields.items()) j[k] = v;
    } else {
        j["char_poly"] = std::get<sl2::DetMinusOne>(c).char_poly.to_string();
    }
    return j;
}

int sign_of_trace(const IntMatrix& m) { return sgn(m.trace()); }

} // namespace

Result run(const std::vector<std::string>& args) {
    CLI::App app{"Birational conjugacy of monomial maps via GL(n,Z)-conjugacy of exponent matrices", "cremona"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    std::optional<std::string> first, second;
    std::vector<std::string> matrix_flags, map_flags;
    std::uint64_t bound = 30;
    long sail_bound = sl2::kDefaultSailBound;
    double tolerance = kDefaultTolerance;
    unsigned length = 20;
    std::function<Result()> action;

    auto inputs = [&] {
        std::vector<Input> in;
        for (const auto* s : {&first, &second})
            if (*s) in.push_back({**s, Input::kAuto});
        for (const auto& s : matrix_flags) in.push_back({s, Input::kMatrix});
        for (const auto& s : map_flags) in.push_back({s, Input::kMap});
        return in;
    };
    auto single = [&]() -> Input {
        auto in = inputs();
        if (in.size() != 1) throw CLI::ValidationError("expected exactly one map or matrix");
        return in[0];
    };

    auto command = [&](const std::string& name, const std::string& about, std::function<Result()> body) {
        CLI::App* sub = app.add_subcommand(name, about);
        sub->add_option("first", first, "Map (\"x*y, 1/x\") or matrix (\"[[1,1],[-1,0]]\", @file)");
        sub->add_option("second", second, "Second map or matrix (conjugate)");
        sub->add_option("--matrix", matrix_flags, "Matrix as JSON or @file")->allow_extra_args(false);
        sub->add_option("--map", map_flags, "Monomial map")->allow_extra_args(false);
        sub->add_flag("--json", "JSON output (always on)");
        sub->callback([&action, body] { action = body; });
        return sub;
    };

    command("parse", "Exponent matrix of a map", [&] {
        const MonomialMap f = input_map(single());
        json j;
        j["matrix"] = matrix_value(f.matrix());
        j["dimension"] = f.dimension();
        return Result{kOk, dump(j)};
    });
    command("print", "Map of an exponent matrix", [&] {
        json j;
        j["map"] = print_map(input_map(single()));
        return Result{kOk, dump(j)};
    });
    command("classify", "Conjugacy class data of a 2x2 unimodular matrix", [&] {
        return Result{kOk, dump(classify_json(input_2x2(single())))};
    });
    command("lls", "LLS period of a hyperbolic det-1 2x2 matrix", [&] {
        const IntMatrix m = input_2x2(single());
        json j = lls_fields(sl2::lls_period(m));
        j["eig_sign"] = sign_of_trace(m);
        return Result{kOk, dump(j)};
    });
    command("reduce", "Reduced matrix conjugate to +-M with its conjugator", [&] {
        const sl2::ReducedForm r = sl2::reduce(input_2x2(single()));
        json j;
        j["reduced"] = matrix_value(r.reduced);
        j["sign"] = r.sign;
        j["conjugator"] = matrix_value(r.conjugator);
        return Result{kOk, dump(j)};
    });
    command("realize", "Reduced matrix with a given LLS period, e.g. '[1,2,1,2]'", [&] {
        if (!first || second || !matrix_flags.empty() || !map_flags.empty())
            throw CLI::ValidationError("expected one sequence");
        json j;
        j["matrix"] = matrix_value(sl2::realize(sl2::LLSPeriod(parse_sequence(*first))));
        return Result{kOk, dump(j)};
    });
    command("enumerate-reduced", "All reduced matrices conjugate to +-M", [&] {
        const auto all = sl2::enumerate_reduced(input_2x2(single()));
        json j;
        j["reduced_matrices"] = json::array();
        for (const auto& m : all) j["reduced_matrices"].push_back(matrix_value(m));
        j["count"] = all.size();
        return Result{kOk, dump(j)};
    });
    command("conjugate", "Decide whether two maps are birationally conjugate", [&] {
        auto in = inputs();
        if (in.size() != 2) throw CLI::ValidationError("expected two maps or matrices");
        const IntMatrix m = input_matrix(in[0]), n = input_matrix(in[1]);
        const ConjugacyVerdict v = gln::integral_conjugacy(m, n, bound);
        const int code = is_conjugate(v) ? kOk : is_not_conjugate(v) ? kNotConjugate : kUndecided;
        return Result{code, verdict_json(v) + "\n"};
    })->add_option("--bound", bound, "Coefficient bound for the lattice search")->capture_default_str();
    command("dyndeg", "Dynamical degrees", [&] {
        const DegreeProfile d = dynamical_degrees(input_map(single()), tolerance);
        json j;
        j["lambdas"] = d.lambdas;
        j["moduli"] = d.moduli;
        j["tolerance"] = d.tolerance;
        return Result{kOk, dump(j)};
    })->add_option("--tolerance", tolerance, "Root accuracy")->capture_default_str();
    command("order", "Order of a map in the Cremona group", [&] {
        const auto k = order(input_map(single()));
        json j;
        if (k) j["order"] = *k;
        else j["order"] = "infinite";
        return Result{kOk, dump(j)};
    });
    command("degree", "Degree of a map", [&] {
        json j;
        j["degree"] = integer_value(projective_degree(input_map(single())));
        return Result{kOk, dump(j)};
    });
    command("degree-growth", "Degrees of the first iterates", [&] {
        const DegreeGrowth g = degree_growth(input_map(single()), length);
        json j;
        j["degrees"] = sequence_value(g.degrees);
        j["growth_rate"] = g.growth_rate;
        return Result{kOk, dump(j)};
    })->add_option("--length", length, "Number of iterates")->capture_default_str();
    command("sail-check", "Compare the sail of a hyperbolic 2x2 matrix with its LLS period", [&] {
        IntMatrix m = input_2x2(single());
        if (m.trace() < 0) m = -m;
        const sl2::LLSPeriod lls = sl2::lls_period(m);
        const sl2::LLSPeriod sail = sl2::sail_lls_oracle(m, sail_bound);
        json j;
        j["sail_lls"] = sequence_value(sail.entries());
        j["lls"] = sequence_value(lls.entries());
        j["agree"] = sail == lls;
        return Result{kOk, dump(j)};
    })->add_option("--bound", sail_bound, "Coordinate bound of the lattice box")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        return action();
    } catch (const CLI::CallForHelp&) {
        return {kOk, app.help()};
    } catch (const CLI::CallForAllHelp&) {
        return {kOk, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::Error& e) {
        return error_result(kUsage, "usage_error", e.what());
    } catch (const ParseError& e) {
        return error_result(kInvalid, "parse_error", e.what());
    } catch (const DomainError& e) {
        return error_result(kInvalid, "domain_error", e.what());
    } catch (const SailBoundTooSmall& e) {
        return error_result(kCap, "sail_bound_too_small", e.what());
    } catch (const CapExceeded& e) {
        return error_result(kCap, "cap_exceeded", e.what());
    } catch (const std::exception& e) {
        return error_result(kInvalid, "internal_error", e.what());
    }
}

} // namespace cremona::cli
