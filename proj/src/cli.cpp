#include "wham/cli.hpp"

#include "wham/cwc.hpp"
#include "wham/error.hpp"
#include "wham/extension.hpp"
#include "wham/identities.hpp"
#include "wham/instance.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

namespace wham {

namespace {

struct Options {
    std::string instance;
    std::string out;
    std::string classes;
    std::string method;
    std::uint64_t seed = 0;
    std::uint64_t trials = 100;
    std::uint64_t cap = kDefaultCap;
    int q = 2;
    int k = 1;
    int r = 1;
    int n = 0;
    bool timing = false;
};

/// What a command produced: status is "holds" or "fails"; a failing verdict
/// always carries a witness.
struct Verdict {
    bool holds = true;
    Json result = Json::object();
    Json witness;
};

InstanceDoc load(const Options& opt)
{
    if (opt.instance.empty())
        throw InvalidArgument("--instance is required");
    return parse_instance_file(opt.instance);
}

void write_out(const Options& opt, const Json& doc)
{
    if (opt.out.empty())
        return;
    std::ofstream file(opt.out);
    if (!file)
        throw InvalidArgument("cannot write " + opt.out);
    file << doc.dump(2) << "\n";
}

Json udp_witness(const UdpCounterexample& c, const WeightedSpace& space)
{
    Json w;
    w["I"] = labels_to_json(c.from_h, space);
    w["J"] = labels_to_json(c.from_k, space);
    w["sum"] = to_string(c.sum);
    w["multiset_I"] = rationals_to_json(c.multiset_h);
    w["multiset_J"] = rationals_to_json(c.multiset_k);
    return w;
}

std::string method_or(const Options& opt, const char* fallback)
{
    const std::string m = opt.method.empty() ? fallback : opt.method;
    if (m != "projective" && m != "bruteforce" && m != "both")
        throw InvalidArgument("--method must be projective, bruteforce or both");
    return m;
}

Verdict cmd_udp(const Options& opt)
{
    const auto doc = load(opt);
    const auto h = doc.h.value_or(all_coordinates(doc.space));
    const auto k = doc.k.value_or(all_coordinates(doc.space));
    const auto report = udp_check(h, k, doc.space);
    Verdict v;
    v.holds = report.holds;
    v.result["H"] = labels_to_json(h, doc.space);
    v.result["K"] = labels_to_json(k, doc.space);
    v.result["holds"] = report.holds;
    if (!report.holds) {
        v.witness = udp_witness(*report.counterexample, doc.space);
        InstanceDoc replay = doc;
        replay.h = report.counterexample->from_h;
        replay.k = report.counterexample->from_k;
        v.witness["instance"] = to_json(replay);
    }
    return v;
}

Json equivalence_json(const EquivalenceResult& r, const char* witness_key)
{
    Json j;
    j["equivalent"] = r.equivalent;
    if (!r.equivalent) {
        j[witness_key] = vec_to_json(*r.witness);
        j["left"] = to_string(r.left);
        j["right"] = to_string(r.right);
    }
    return j;
}

Verdict cmd_local_equiv(const Options& opt)
{
    const auto doc = load(opt);
    const auto l = doc.code("left");
    const auto m = doc.code("right");
    const auto method = method_or(opt, "both");
    Verdict v;
    std::optional<bool> verdict;
    auto record = [&](const char* name, const EquivalenceResult& r, const char* witness_key) {
        v.result[name] = equivalence_json(r, witness_key);
        if (verdict && *verdict != r.equivalent)
            throw Error("projective and brute-force criteria disagree");
        verdict = r.equivalent;
        if (!r.equivalent && v.witness.is_null()) {
            v.witness = v.result[name];
            v.witness["method"] = name;
        }
    };
    if (method != "bruteforce")
        record("projective", locally_equivalent_projective(l, m, opt.cap), "point");
    if (method != "projective")
        record("bruteforce", locally_equivalent_bruteforce(l, m, opt.cap), "vector");
    v.holds = *verdict;
    if (!v.holds)
        v.witness["instance"] = to_json(doc);
    return v;
}

Verdict cmd_extend(const Options& opt)
{
    const auto doc = load(opt);
    const auto l = doc.code("left");
    const auto m = doc.code("right");
    const auto outcome = try_extend_to_isometry(l, m, opt.cap);
    Verdict v;
    v.result["locally_equivalent"] = outcome.local.equivalent;
    v.result["support_udp"] = outcome.udp.holds;
    if (outcome.isometry) {
        v.result["isometry"] = isometry_to_json(*outcome.isometry, doc.space);
        return v;
    }
    v.holds = false;
    if (!outcome.local.equivalent) {
        v.witness = equivalence_json(outcome.local, "point");
        v.witness["reason"] = "not locally equivalent";
    } else {
        v.witness = udp_witness(*outcome.udp.counterexample, doc.space);
        v.witness["reason"] = "image supports fail the unique decomposition property";
    }
    v.witness["instance"] = to_json(doc);
    return v;
}

Verdict cmd_mep(const Options& opt)
{
    const auto doc = load(opt);
    const auto report = mep_check(doc.space);
    Verdict v;
    v.holds = report.holds;
    v.result["holds"] = report.holds;
    if (!report.holds) {
        v.witness = udp_witness(*report.udp.counterexample, doc.space);
        v.witness["alpha"] = vec_to_json(*report.alpha);
        v.witness["beta"] = vec_to_json(*report.beta);
        InstanceDoc replay{doc.space};
        replay.field = doc.field.value_or(Field::create(2, 1));
        replay.alpha = report.alpha;
        replay.beta = report.beta;
        v.witness["instance"] = to_json(replay);
    }
    return v;
}

Verdict cmd_transit(const Options& opt)
{
    const auto doc = load(opt);
    if (!doc.alpha || !doc.beta)
        throw InvalidArgument("transit needs alpha and beta in the instance");
    const auto outcome = try_transitivity_map(*doc.alpha, *doc.beta, doc.space, *doc.field);
    Verdict v;
    v.result["weight_alpha"] = to_string(outcome.weight_alpha);
    v.result["weight_beta"] = to_string(outcome.weight_beta);
    if (outcome.isometry) {
        v.result["isometry"] = isometry_to_json(*outcome.isometry, doc.space);
        v.result["image"] = vec_to_json(outcome.isometry->apply(*doc.alpha, *doc.field));
        return v;
    }
    v.holds = false;
    if (outcome.weight_alpha != outcome.weight_beta) {
        v.witness["reason"] = "weights differ";
        v.witness["weight_alpha"] = to_string(outcome.weight_alpha);
        v.witness["weight_beta"] = to_string(outcome.weight_beta);
    } else {
        v.witness = udp_witness(*outcome.udp.counterexample, doc.space);
        v.witness["reason"] = "supports fail the unique decomposition property";
    }
    v.witness["instance"] = to_json(doc);
    return v;
}

Verdict cmd_cwc_check(const Options& opt)
{
    const auto doc = load(opt);
    const auto g = doc.code("generator");
    const auto method = method_or(opt, "projective");
    const auto report = sigma_check(g, opt.cap);
    Verdict v;
    v.holds = report.is_constant;
    v.result["is_constant"] = report.is_constant;
    if (report.sigma) {
        v.result["sigma"] = to_string(*report.sigma);
        v.result["codeword_weight"] =
            to_string(subspace_weight_formula(static_cast<int>(g.k()), 1, *report.sigma, g.field().q()));
    }
    Json per_point = Json::array();
    for (std::size_t i = 0; i < report.points.size(); ++i)
        per_point.push_back({{"point", vec_to_json(report.points[i])}, {"sum", to_string(report.per_point[i])}});
    v.result["per_point"] = std::move(per_point);

    const auto multiset = multiset_condition_check(g, opt.cap);
    Json mc;
    mc["holds"] = multiset.holds;
    if (!multiset.holds) {
        mc["point_i"] = vec_to_json(report.points[*multiset.point_i]);
        mc["point_j"] = vec_to_json(report.points[*multiset.point_j]);
        mc["weight"] = to_string(*multiset.weight);
        mc["count_i"] = multiset.count_i;
        mc["count_j"] = multiset.count_j;
    }
    v.result["multiset_condition"] = std::move(mc);

    if (method != "projective") {
        const auto brute = is_constant_weight_bruteforce(g, opt.cap);
        v.result["bruteforce_constant"] = brute.constant;
        if (method == "bruteforce")
            v.holds = brute.constant;
        else if (brute.constant != report.is_constant)
            throw Error("projective and brute-force criteria disagree");
        if (!brute.constant) {
            v.result["bruteforce_witness"] = {{"first", vec_to_json(*brute.first)},
                                              {"first_weight", to_string(brute.first_weight)},
                                              {"second", vec_to_json(*brute.second)},
                                              {"second_weight", to_string(brute.second_weight)}};
        }
    }
    if (!v.holds) {
        if (report.violating_point) {
            v.witness["point"] = vec_to_json(report.points[0]);
            v.witness["point_sum"] = to_string(report.per_point[0]);
            v.witness["other_point"] = vec_to_json(report.points[*report.violating_point]);
            v.witness["other_sum"] = to_string(report.per_point[*report.violating_point]);
        } else {
            v.witness = v.result["bruteforce_witness"];
        }
        v.witness["instance"] = to_json(doc);
    }
    return v;
}

Json constructed(const CodeMatrix& g, Verdict& v, const Options& opt, std::optional<std::string> description)
{
    const auto report = sigma_check(g, opt.cap);
    v.result["length"] = g.length();
    v.result["sigma"] = to_string(*report.sigma);
    v.result["codeword_weight"] =
        to_string(subspace_weight_formula(static_cast<int>(g.k()), 1, *report.sigma, g.field().q()));
    v.result["multiset_condition"] = multiset_condition_check(g, opt.cap).holds;
    auto doc = instance_for(g);
    doc.description = std::move(description);
    Json j = to_json(doc);
    v.result["instance"] = j;
    return j;
}

Verdict cmd_cwc_simplex(const Options& opt)
{
    if (opt.k < 1 || opt.r < 1)
        throw InvalidArgument("--k and --r must be at least 1");
    const Field field = Field::of_order(opt.q);
    const auto g =
        simplex_generator(field, static_cast<std::size_t>(opt.k), static_cast<std::size_t>(opt.r), opt.cap);
    Verdict v;
    write_out(opt, constructed(g, v, opt,
                               "simplex code, q=" + std::to_string(opt.q) + " k=" + std::to_string(opt.k) +
                                   " r=" + std::to_string(opt.r)));
    return v;
}

Verdict cmd_cwc_build(const Options& opt)
{
    if (opt.classes.empty())
        throw InvalidArgument("--classes is required");
    std::ifstream in(opt.classes);
    if (!in)
        throw InvalidArgument(opt.classes + ": cannot open file");
    Json classes_doc;
    try {
        classes_doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(opt.classes + ": syntax error: " + e.what());
    }
    if (!classes_doc.is_object() || !classes_doc.contains("field") || !classes_doc.contains("k") ||
        !classes_doc.contains("classes"))
        throw ParseError(opt.classes + ": expected keys field, k and classes");
    const Field field = field_from_json(classes_doc["field"]);
    if (!classes_doc["k"].is_number_integer() || classes_doc["k"].get<int>() < 1)
        throw ParseError(opt.classes + ": k: expected a positive integer");
    const auto k = classes_doc["k"].get<std::size_t>();
    std::vector<std::vector<Rational>> budget;
    for (std::size_t p = 0; p < classes_doc["classes"].size(); ++p) {
        const auto& cls = classes_doc["classes"][p];
        if (!cls.is_array())
            throw ParseError(opt.classes + ": classes[" + std::to_string(p) + "]: expected an array of weights");
        std::vector<Rational> weights;
        for (const auto& w : cls) {
            if (!w.is_string() && !w.is_number_integer())
                throw ParseError(opt.classes + ": classes[" + std::to_string(p) + "]: expected rational strings");
            weights.push_back(w.is_string() ? parse_rational(w.get<std::string>()) : Rational(w.get<long long>()));
        }
        budget.push_back(std::move(weights));
    }
    const auto g = weighted_constant_builder(field, k, budget, opt.cap);
    Verdict v;
    std::optional<std::string> description;
    if (classes_doc.contains("description") && classes_doc["description"].is_string())
        description = classes_doc["description"].get<std::string>();
    write_out(opt, constructed(g, v, opt, description));
    return v;
}

Verdict cmd_verify_identities(const Options& opt)
{
    IdentitySweepReport report;
    if (!opt.instance.empty()) {
        const auto doc = load(opt);
        for (const char* name : {"generator", "left", "right"}) {
            const bool present = (std::string_view(name) == "generator" && doc.generator) ||
                                 (std::string_view(name) == "left" && doc.left) ||
                                 (std::string_view(name) == "right" && doc.right);
            if (present)
                check_all_identities(doc.code(name), opt.seed, report, opt.cap);
        }
    }
    SweepOptions sweep;
    sweep.cap = opt.cap;
    const auto random = run_identity_sweep(opt.seed, opt.trials, sweep);
    for (const auto& t : random.tallies) {
        auto it = std::find_if(report.tallies.begin(), report.tallies.end(),
                               [&](const auto& u) { return u.name == t.name; });
        if (it == report.tallies.end())
            report.tallies.push_back(t);
        else {
            it->checks += t.checks;
            it->passed += t.passed;
        }
    }
    if (!report.failing_instance && random.failing_instance) {
        report.failing_instance = random.failing_instance;
        report.failing_identity = random.failing_identity;
    }

    Verdict v;
    v.holds = report.all_passed();
    v.result["seed"] = opt.seed;
    v.result["trials"] = random.trials;
    Json tallies = Json::object();
    for (const auto& t : report.tallies)
        tallies[t.name] = {{"checks", t.checks}, {"passed", t.passed}};
    v.result["identities"] = std::move(tallies);
    if (!v.holds) {
        v.witness["identity"] = report.failing_identity;
        v.witness["instance"] = to_json(instance_for(*report.failing_instance));
    }
    return v;
}

Verdict cmd_qbinom(const Options& opt)
{
    if (opt.n < 0 || opt.r < 0)
        throw InvalidArgument("--n and --r must be nonnegative");
    if (opt.q < 2)
        throw InvalidArgument("--q must be at least 2");
    Verdict v;
    v.result["n"] = opt.n;
    v.result["r"] = opt.r;
    v.result["q"] = opt.q;
    v.result["value"] = qbinom(opt.n, opt.r, opt.q).str();
    return v;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Weighted Hamming metric toolkit: extension property, isometries, constant weight codes"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--cap", opt.cap, "enumeration cap")->capture_default_str();
        sub->add_flag("--timing", opt.timing, "include elapsed milliseconds in the output");
    };
    auto add_instance = [&](CLI::App* sub) {
        sub->add_option("--instance", opt.instance, "instance document")->required();
        add_common(sub);
    };

    auto* udp = app.add_subcommand("udp", "unique decomposition property of (H, K, omega)");
    add_instance(udp);
    auto* local = app.add_subcommand("local-equiv", "local equivalence of the maps `left` and `right`");
    add_instance(local);
    local->add_option("--method", opt.method, "projective|bruteforce|both");
    auto* extend = app.add_subcommand("extend", "extend local equivalence to a monomial isometry");
    add_instance(extend);
    auto* mep = app.add_subcommand("mep", "MacWilliams extension property of omega");
    add_instance(mep);
    auto* transit = app.add_subcommand("transit", "isometry mapping `alpha` to `beta`");
    add_instance(transit);

    auto* cwc = app.add_subcommand("cwc", "constant weight codes");
    cwc->require_subcommand(1);
    auto* check = cwc->add_subcommand("check", "constant weight criterion for `generator`");
    add_instance(check);
    check->add_option("--method", opt.method, "projective|bruteforce|both");
    auto* simplex = cwc->add_subcommand("simplex", "r-fold repeated simplex code");
    simplex->add_option("--q", opt.q, "field order")->required();
    simplex->add_option("--k", opt.k, "dimension")->required();
    simplex->add_option("--r", opt.r, "repetitions")->capture_default_str();
    simplex->add_option("--out", opt.out, "write the instance document here");
    add_common(simplex);
    auto* build = cwc->add_subcommand("build", "constant weight code from per-point weight classes");
    build->add_option("--classes", opt.classes, "class budget document")->required();
    build->add_option("--out", opt.out, "write the instance document here");
    add_common(build);

    auto* identities = app.add_subcommand("verify-identities", "randomized check of the subspace weight identities");
    identities->add_option("--instance", opt.instance, "also check the matrices of this instance");
    identities->add_option("--trials", opt.trials, "random instances")->capture_default_str();
    identities->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    add_common(identities);

    auto* qb = app.add_subcommand("qbinom", "Gaussian binomial coefficient");
    qb->add_option("--n", opt.n)->required();
    qb->add_option("--r", opt.r)->required();
    qb->add_option("--q", opt.q)->required();
    add_common(qb);

    Json doc;
    int code = kExitError;
    const auto start = std::chrono::steady_clock::now();
    std::string command;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        Verdict v;
        if (udp->parsed())
            command = "udp", v = cmd_udp(opt);
        else if (local->parsed())
            command = "local-equiv", v = cmd_local_equiv(opt);
        else if (extend->parsed())
            command = "extend", v = cmd_extend(opt);
        else if (mep->parsed())
            command = "mep", v = cmd_mep(opt);
        else if (transit->parsed())
            command = "transit", v = cmd_transit(opt);
        else if (check->parsed())
            command = "cwc check", v = cmd_cwc_check(opt);
        else if (simplex->parsed())
            command = "cwc simplex", v = cmd_cwc_simplex(opt);
        else if (build->parsed())
            command = "cwc build", v = cmd_cwc_build(opt);
        else if (identities->parsed())
            command = "verify-identities", v = cmd_verify_identities(opt);
        else
            command = "qbinom", v = cmd_qbinom(opt);

        doc["command"] = command;
        doc["status"] = v.holds ? "holds" : "fails";
        doc["result"] = std::move(v.result);
        if (!v.holds)
            doc["witness"] = std::move(v.witness);
        code = v.holds ? kExitHolds : kExitFails;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitHolds;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitHolds;
    } catch (const CLI::ParseError& e) {
        doc = Json::object();
        doc["status"] = "error";
        doc["message"] = std::string("usage: ") + e.what();
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        doc = Json::object();
        if (!command.empty())
            doc["command"] = command;
        doc["status"] = "error";
        doc["message"] = e.what();
        err << "error: " << e.what() << "\n";
    }
    if (opt.timing) {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        doc["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    out << doc.dump(2) << "\n";
    return code;
}

} // namespace wham
