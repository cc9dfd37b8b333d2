// posetrep: command-line front end over the JSON codecs.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "posetrep/json_io.hpp"

using namespace posetrep;
using json_io::json;

namespace {

enum Exit { Ok = 0, AssertionFailed = 1, Invalid = 2, Budget = 3 };

json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
    }
}

void write_json(const json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump() << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot write '" + out + "'");
    f << j.dump() << "\n";
}

std::uint64_t enumeration_budget(std::uint64_t flag) {
    if (flag) return flag;
    if (const char* env = std::getenv("POSETREP_BUDGET")) {
        try {
            std::size_t used = 0;
            auto v = std::stoull(env, &used);
            if (used == std::string(env).size() && v > 0) return v;
        } catch (const std::exception&) {
        }
        throw Error(ErrorCode::InvalidInput, "POSETREP_BUDGET must be a positive integer");
    }
    return default_brute_budget;
}

/// Calls fn with the concrete field named by spec.
template <class Fn>
auto with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.is_prime()) return fn(PrimeField(spec.p));
    return fn(RationalField());
}

PrimeField prime_field(const std::string& flag) {
    FieldSpec spec = json_io::field_spec_from_string(flag);
    if (!spec.is_prime()) throw Error(ErrorCode::InvalidInput, "enumeration needs a prime field");
    return PrimeField(spec.p);
}

std::vector<std::uint32_t> parse_primes(const std::string& list) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(list);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(prime_field(item).characteristic());
    if (out.empty()) throw Error(ErrorCode::InvalidInput, "empty field list");
    return out;
}

template <ExactField Field>
MatrixRep<Field> read_rep(const Poset& p, const Field& f, const json& j) {
    return json_io::representation_from_json(p, f, j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Representations of finite posets: finite type, roots and derivations"};
    app.require_subcommand(1);

    std::string poset_path, dim_path, rep_path, derived_path, pivot, field_flag, out, fields = "2,3", rule = "sum";
    std::uint64_t budget = 0, scan_budget = default_scan_budget;
    std::int64_t max_total = 0;

    auto add_out = [&](CLI::App* c) { c->add_option("--out,-o", out, "Write the JSON result here instead of stdout"); };
    auto add_poset = [&](CLI::App* c) { c->add_option("--poset,-p", poset_path, "Poset JSON file, - for stdin")->required(); };
    auto add_dim = [&](CLI::App* c) { c->add_option("--dim,-d", dim_path, "Dimension JSON file")->required(); };
    auto add_budget = [&](CLI::App* c) {
        c->add_option("--budget", budget, "Enumeration budget in matrices (default POSETREP_BUDGET or 2^24)");
    };

    auto* finite = app.add_subcommand("check-finite-type", "Decide finite type by critical dominance");
    add_poset(finite), add_dim(finite), add_out(finite);

    auto* tits = app.add_subcommand("tits", "Evaluate the Tits form");
    add_poset(tits), add_dim(tits), add_out(tits);

    auto* criticals = app.add_subcommand("criticals", "Critical subposets of a poset");
    add_poset(criticals), add_out(criticals);

    auto* derive = app.add_subcommand("derive", "Derived poset with respect to a maximal element");
    add_poset(derive), add_out(derive);
    derive->add_option("--pivot,-a", pivot, "Label of a maximal element")->required();

    auto* differentiate_cmd = app.add_subcommand("differentiate", "Derived representation D_a");
    differentiate_cmd->add_option("--derived", derived_path, "Derived poset JSON from 'derive'")->required();
    differentiate_cmd->add_option("--rep,-r", rep_path, "Representation JSON on the base poset")->required();
    differentiate_cmd->add_option("--rule", rule, "Value at pairs")->check(CLI::IsMember({"sum", "intersection"}));
    add_out(differentiate_cmd);

    auto* integrate_cmd = app.add_subcommand("integrate", "Integrate a representation of the derived poset");
    integrate_cmd->add_option("--derived", derived_path, "Derived poset JSON from 'derive'")->required();
    integrate_cmd->add_option("--rep,-r", rep_path, "Representation JSON on the derived poset")->required();
    add_out(integrate_cmd);

    auto* construct = app.add_subcommand("construct", "Indecomposable of a finite-type root");
    add_poset(construct), add_dim(construct), add_budget(construct), add_out(construct);
    construct->add_option("--field,-f", field_flag, "Prime p or Q (default Q)");

    auto* brute = app.add_subcommand("brute-count", "Count isomorphism classes and indecomposables over GF(p)");
    add_poset(brute), add_dim(brute), add_budget(brute), add_out(brute);
    brute->add_option("--field,-f", field_flag, "Prime p (default 2)");

    auto* decompose_cmd = app.add_subcommand("decompose", "Split a representation into indecomposables");
    add_poset(decompose_cmd), add_out(decompose_cmd);
    decompose_cmd->add_option("--rep,-r", rep_path, "Representation JSON")->required();

    auto* verify = app.add_subcommand("verify", "Check the classification for every d up to a total");
    add_poset(verify), add_budget(verify), add_out(verify);
    verify->add_option("--max-total", max_total, "Largest |d|")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--fields", fields, "Comma separated primes");
    verify->add_option("--scan-budget", scan_budget, "Budget of the subvector scan");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : Invalid;
    }

    try {
        auto load_poset = [&] { return json_io::poset_from_json(read_json(poset_path)); };

        if (*finite) {
            Poset p = load_poset();
            auto d = json_io::dimension_from_json(p, read_json(dim_path));
            auto w = dominated_critical(p, d);
            json j = {{"finite_type", !w}};
            if (w) j["witness"] = json_io::to_json(p, *w);
            write_json(j, out);
        } else if (*tits) {
            Poset p = load_poset();
            auto d = json_io::dimension_from_json(p, read_json(dim_path));
            write_json({{"value", tits_value(p, d)}}, out);
        } else if (*criticals) {
            Poset p = load_poset();
            json list = json::array();
            for (const auto& e : critical_subposet_embeddings(p)) {
                const Poset& abstract = critical_poset(e.kind);
                json image = json::object();
                for (std::size_t i = 0; i < e.image.size(); ++i) image[abstract.label(i)] = p.label(e.image[i]);
                list.push_back({{"kind", std::string(to_string(e.kind))}, {"embedding", image}});
            }
            json j = {{"embeddings", list}, {"representation_finite", list.empty()}, {"width", width(p).size()}};
            if (auto sd = is_semidecomposable(p)) {
                auto labels = [&](const ElementSet& s) {
                    json a = json::array();
                    for (auto i : s) a.push_back(p.label(i));
                    return a;
                };
                j["semidecomposition"] = {{"upper", labels(sd->upper)}, {"lower", labels(sd->lower)}, {"chain", labels(sd->chain)}};
            }
            write_json(j, out);
        } else if (*derive) {
            write_json(json_io::to_json(derive_poset(load_poset(), pivot)), out);
        } else if (*differentiate_cmd) {
            auto ctx = json_io::derived_from_json(read_json(derived_path));
            json rj = read_json(rep_path);
            const PairRule r = rule == "sum" ? PairRule::Sum : PairRule::Intersection;
            with_field(json_io::representation_field(rj), [&](const auto& f) {
                auto u = read_rep(ctx.base, f, rj);
                write_json(json_io::to_json(lift(differentiate(rho(u), ctx, r))), out);
                return 0;
            });
        } else if (*integrate_cmd) {
            auto ctx = json_io::derived_from_json(read_json(derived_path));
            json rj = read_json(rep_path);
            with_field(json_io::representation_field(rj), [&](const auto& f) {
                write_json(json_io::to_json(integrate(read_rep(ctx.result, f, rj), ctx)), out);
                return 0;
            });
        } else if (*construct) {
            Poset p = load_poset();
            auto d = json_io::dimension_from_json(p, read_json(dim_path));
            FieldSpec spec = field_flag.empty() ? FieldSpec::rationals() : json_io::field_spec_from_string(field_flag);
            const auto b = enumeration_budget(budget);
            with_field(spec, [&](const auto& f) {
                auto r = construct_indecomposable(p, d, f, b);
                json j = {{"field", json_io::to_json(spec)}, {"tits_value", tits_value(p, d)}, {"used_fallback", r.used_fallback}};
                j["element"] = r.element ? json_io::to_json(*r.element) : json(nullptr);
                write_json(j, out);
                return 0;
            });
        } else if (*brute) {
            Poset p = load_poset();
            auto d = json_io::dimension_from_json(p, read_json(dim_path));
            PrimeField f = prime_field(field_flag.empty() ? "2" : field_flag);
            const auto b = enumeration_budget(budget);
            auto orbits = enumerate_orbits(p, d, f, b);
            auto indec = brute_force_indecomposables(p, d, f, b);
            json reps = json::array();
            for (const auto& u : indec) reps.push_back(json_io::to_json(u));
            write_json({{"field", f.spec().name()},
                        {"iso_classes", d.d0 == 0 ? std::size_t{1} : orbits.representatives.size()},
                        {"indecomposables", indec.size()},
                        {"representatives", reps}},
                       out);
        } else if (*decompose_cmd) {
            Poset p = load_poset();
            json rj = read_json(rep_path);
            with_field(json_io::representation_field(rj), [&](const auto& f) {
                auto dec = decompose(read_rep(p, f, rj));
                json summands = json::array(), trivial = json::object();
                for (const auto& s : dec.summands) summands.push_back(json_io::to_json(s));
                for (std::size_t a = 0; a < p.size(); ++a)
                    if (dec.trivial[a]) trivial[p.label(a)] = dec.trivial[a];
                write_json({{"summands", summands}, {"trivial", trivial}}, out);
                return 0;
            });
        } else if (*verify) {
            Poset p = load_poset();
            VerifyOptions opt;
            opt.enumeration_budget = enumeration_budget(budget);
            opt.scan_budget = scan_budget;
            auto reports = verify_main_theorem(p, max_total, parse_primes(fields), opt);
            json list = json::array();
            for (const auto& r : reports) list.push_back(json_io::to_json(p, r));
            write_json(list, out);
            if (failure_count(reports)) return AssertionFailed;
        }
    } catch (const Error& e) {
        std::cerr << "posetrep: " << e.what() << "\n";
        return e.code() == ErrorCode::BudgetExceeded || e.code() == ErrorCode::UndecidableAtBudget ? Budget : Invalid;
    } catch (const json::exception& e) {
        std::cerr << "posetrep: " << e.what() << "\n";
        return Invalid;
    }
    return Ok;
}
