#include "jensen/cli.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "jensen/harness.hpp"
#include "jensen/serialization.hpp"

namespace jensen::cli {

namespace {

struct Options {
    std::string function;
    std::string alpha;
    std::string input;
    std::string inline_json;
    std::string format = "json";
    std::string tol_rel;
    std::string tol_abs;
    std::uint64_t seed = 42;
    std::size_t trials = 1000;
    bool strip_zeros = false;
};

// Dot-decimal parsing independent of the C locale.
double parse_number(const std::string& text, const std::string& flag) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (!text.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) throw InputError("flag " + flag + " expects a number, got '" + text + "'");
    return value;
}

Tolerance tolerance_of(const Options& o) {
    Tolerance tol;
    if (!o.tol_rel.empty()) tol.rel = parse_number(o.tol_rel, "--tol-rel");
    if (!o.tol_abs.empty()) tol.abs = parse_number(o.tol_abs, "--tol-abs");
    if (!(tol.rel >= 0.0) || !(tol.abs >= 0.0)) throw InputError("tolerances must be nonnegative");
    return tol;
}

Json load_input(const Options& o) {
    if (!o.inline_json.empty()) return parse_json(o.inline_json);
    if (o.input.empty()) throw InputError("one of --input or --inline is required");
    std::ifstream in(o.input);
    if (!in) throw InputError("cannot read input file '" + o.input + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str());
}

ConvexFunction resolve_function(const Options& o, const Json& input) {
    if (!o.function.empty()) {
        if (o.function.front() == '{') return function_from_json(parse_json(o.function));
        return ConvexFunction::make(o.function);
    }
    if (input.is_object() && input.contains("function")) return function_from_json(input["function"]);
    throw InputError("--function is required");
}

Json certificates_json(const std::vector<Certificate>& cs, bool& all_valid) {
    Json out = Json::array();
    for (const auto& c : cs) {
        all_valid = all_valid && c.valid;
        out.push_back(to_json(c));
    }
    return out;
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void print_table(const Json& report, std::ostream& out) {
    std::size_t width = 0;
    for (const auto& [key, value] : report.items())
        if (!value.is_array() || key != "certificates") width = std::max(width, key.size());
    for (const auto& [key, value] : report.items()) {
        if (key == "certificates" || key == "checks" || key == "failures") continue;
        out << std::left << std::setw(static_cast<int>(width) + 2) << key;
        out << (value.is_structured() ? value.dump() : scalar_text(value)) << '\n';
    }
    if (report.contains("certificates")) {
        out << '\n' << std::left << std::setw(18) << "certificate" << std::setw(26) << "lhs" << std::setw(26) << "bound"
            << "valid\n";
        for (const auto& c : report["certificates"])
            out << std::left << std::setw(18) << scalar_text(c["name"]) << std::setw(26) << c["lhs"].dump()
                << std::setw(26) << c["bound"].dump() << (c["valid"].get<bool>() ? "yes" : "no") << '\n';
    }
    if (report.contains("checks") && report["checks"].is_object()) {
        out << '\n';
        for (const auto& [name, counts] : report["checks"].items())
            out << std::left << std::setw(48) << name << counts["passed"].dump() << " passed, "
                << counts["failed"].dump() << " failed\n";
    }
    if (report.contains("checks") && report["checks"].is_array()) {
        out << '\n';
        for (const auto& c : report["checks"])
            out << std::left << std::setw(32) << scalar_text(c["name"]) << (c["passed"].get<bool>() ? "pass" : "FAIL")
                << "  slack " << c["slack"].dump() << '\n';
    }
}

void emit(const Json& report, const Options& o, std::ostream& out) {
    if (o.format == "table")
        print_table(report, out);
    else
        out << dump(report) << '\n';
}

int cmd_gap(const Options& o, std::ostream& out) {
    const Json input = load_input(o);
    const ConvexFunction f = resolve_function(o, input);
    const WeightedSample s = sample_from_json(input);
    const Tolerance tol = tolerance_of(o);
    const double gap = jensen_gap(f, s);
    const bool valid = tol.geq(gap, 0.0);
    emit(Json{{"command", "gap"}, {"function", to_json(f)}, {"gap", gap}, {"valid", valid}}, o, out);
    return valid ? kOk : kInvalid;
}

int cmd_chain(const Options& o, std::ostream& out) {
    const Json input = load_input(o);
    const ConvexFunction f = resolve_function(o, input);
    const WeightedSample s = sample_from_json(input);
    std::optional<Bounds> box;
    std::optional<Bounds> grads;
    if (input.contains("box")) box = bounds_from_json(input["box"]);
    if (input.contains("gradient_bounds")) grads = bounds_from_json(input["gradient_bounds"]);
    const BoundChainReport r = bound_chain(f, s, box, grads, tolerance_of(o));
    Json report{{"command", "chain"}, {"function", to_json(f)}};
    report.update(to_json(r));
    emit(report, o, out);
    return r.valid ? kOk : kInvalid;
}

int cmd_means(const Options& o, std::ostream& out) {
    const Json input = load_input(o);
    const PositiveSample s = positive_sample_from_json(input);
    const Tolerance tol = tolerance_of(o);
    const double power = o.alpha.empty() ? 2.0 : parse_number(o.alpha, "--alpha");
    const WeightedMeans m = weighted_means(s);
    bool valid = true;
    Json certs = certificates_json({ag_certificate(s, std::nullopt, tol), gh_certificate(s, std::nullopt, tol),
                                    power_mean_certificate(s, power, std::nullopt, tol),
                                    self_power_certificate(s, std::nullopt, tol)},
                                   valid);
    emit(Json{{"command", "means"},
              {"arithmetic", m.arithmetic},
              {"geometric", m.geometric},
              {"harmonic", m.harmonic},
              {"certificates", certs},
              {"valid", valid}},
         o, out);
    return valid ? kOk : kInvalid;
}

int cmd_entropy(const Options& o, std::ostream& out) {
    const DiscreteDistribution d = distribution_from_json(load_input(o), o.strip_zeros);
    const Tolerance tol = tolerance_of(o);
    std::vector<Certificate> cs = {dg_counterpart_bound(d, tol)};
    if (d.size() >= 2) {
        cs.push_back(t4_certificate(d, tol));
        cs.push_back(t5_certificate(d, tol));
    }
    bool valid = true;
    Json certs = certificates_json(cs, valid);
    const double h = shannon_entropy(d);
    const double log_n = std::log(static_cast<double>(d.size()));
    valid = valid && tol.geq(h, 0.0) && tol.leq(h, log_n);
    emit(Json{{"command", "entropy"},
              {"n", d.size()},
              {"shannon_entropy", h},
              {"log_n", log_n},
              {"certificates", certs},
              {"valid", valid}},
         o, out);
    return valid ? kOk : kInvalid;
}

int cmd_renyi(const Options& o, std::ostream& out) {
    if (o.alpha.empty()) throw InputError("renyi requires --alpha");
    const RenyiOrder order(parse_number(o.alpha, "--alpha"));
    const DiscreteDistribution d = distribution_from_json(load_input(o), o.strip_zeros);
    const Tolerance tol = tolerance_of(o);
    std::vector<Certificate> cs = {renyi_order_gap(d, order, tol)};
    if (d.size() >= 2) {
        cs.push_back(t6_certificate(d, order, tol));
        cs.push_back(t7_certificate(d, order, tol));
        cs.push_back(t8_certificate(d, order, tol));
        cs.push_back(t9_certificate(d, order, tol));
    }
    bool valid = true;
    Json certs = certificates_json(cs, valid);
    emit(Json{{"command", "renyi"},
              {"n", d.size()},
              {"alpha", order.value()},
              {"renyi_entropy", renyi_entropy(d, order)},
              {"shannon_entropy", shannon_entropy(d)},
              {"certificates", certs},
              {"valid", valid}},
         o, out);
    return valid ? kOk : kInvalid;
}

int cmd_energy(const Options& o, std::ostream& out) {
    const DiscreteDistribution d = distribution_from_json(load_input(o), o.strip_zeros);
    const Tolerance tol = tolerance_of(o);
    const double e = informational_energy(d);
    const double via_renyi = std::exp(-renyi_entropy(d, RenyiOrder(2.0)));
    const double n = static_cast<double>(d.size());
    const bool valid = tol.leq(1.0 / n, e) && tol.leq(e, 1.0) && tol.eq(e, via_renyi);
    emit(Json{{"command", "energy"},
              {"n", d.size()},
              {"informational_energy", e},
              {"exp_neg_renyi_2", via_renyi},
              {"valid", valid}},
         o, out);
    return valid ? kOk : kInvalid;
}

int cmd_verify(const Options& o, std::ostream& out) {
    SuiteConfig config;
    config.seed = o.seed;
    config.trials = o.trials;
    config.tolerance = tolerance_of(o);
    config.threads = std::max(1u, std::thread::hardware_concurrency());
    const SuiteReport r = run_suite(config);
    Json report{{"command", "verify"}};
    report.update(to_json(r));
    emit(report, o, out);
    return r.total_failures == 0 && r.invalid_instances == 0 ? kOk : kInvalid;
}

int cmd_replay(const Options& o, std::ostream& out) {
    const Json record = load_input(o);
    const Verdict v = replay_record(record, tolerance_of(o));
    Json report{{"command", "replay"}};
    report.update(to_json(v));
    if (record.contains("check") && record["check"].is_string()) {
        const std::string full = record["check"].get<std::string>();
        const std::string check = full.substr(full.find_last_of('/') + 1);
        const CheckOutcome* c = v.find(check);
        report["check"] = full;
        report["reproduced"] = check == "instance_invalid" ? !v.instance_valid : (c != nullptr && !c->passed);
    }
    emit(report, o, out);
    return v.passed() ? kOk : kInvalid;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Jensen-gap converse bounds, mean and entropy certificates", "jensen"};
    app.require_subcommand(1);
    Options o;

    auto io_flags = [&](CLI::App* sub) {
        sub->add_option("--input", o.input, "JSON input file");
        sub->add_option("--inline", o.inline_json, "JSON input given on the command line");
        sub->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--tol-rel", o.tol_rel, "relative tolerance (default 1e-9)");
        sub->add_option("--tol-abs", o.tol_abs, "absolute tolerance (default 1e-12)");
    };

    auto* gap = app.add_subcommand("gap", "Jensen gap of a function over a weighted sample");
    auto* chain = app.add_subcommand("chain", "gap and the full chain of upper bounds");
    for (auto* sub : {gap, chain}) {
        io_flags(sub);
        sub->add_option("--function", o.function, "registry name or {\"name\":..,\"params\":{..}}");
    }
    auto* means = app.add_subcommand("means", "weighted means and their certificates");
    io_flags(means);
    means->add_option("--alpha", o.alpha, "exponent of the power-mean certificate (default 2)");

    auto* entropy = app.add_subcommand("entropy", "Shannon entropy certificates");
    auto* renyi = app.add_subcommand("renyi", "Renyi entropy certificates");
    auto* energy = app.add_subcommand("energy", "informational energy");
    for (auto* sub : {entropy, renyi, energy}) {
        io_flags(sub);
        sub->add_flag("--strip-zeros", o.strip_zeros, "drop zero entries and renormalize");
    }
    renyi->add_option("--alpha", o.alpha, "Renyi order, alpha > 0 and alpha != 1")->required();

    auto* verify = app.add_subcommand("verify", "run the randomized verification suite");
    verify->add_option("--seed", o.seed, "suite seed");
    verify->add_option("--trials", o.trials, "number of trials");
    verify->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    verify->add_option("--tol-rel", o.tol_rel, "relative tolerance");
    verify->add_option("--tol-abs", o.tol_abs, "absolute tolerance");

    auto* replay = app.add_subcommand("replay", "re-verify a failure record from a verify report");
    io_flags(replay);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gap) return cmd_gap(o, out);
        if (*chain) return cmd_chain(o, out);
        if (*means) return cmd_means(o, out);
        if (*entropy) return cmd_entropy(o, out);
        if (*renyi) return cmd_renyi(o, out);
        if (*energy) return cmd_energy(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*replay) return cmd_replay(o, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace jensen::cli
