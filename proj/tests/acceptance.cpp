// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "oracles.hpp"

#include "wham/cwc.hpp"
#include "wham/extension.hpp"
#include "wham/identities.hpp"
#include "wham/instance.hpp"
#include "wham/random.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

using namespace wham;

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

const int kOrders[] = {2, 3, 4, 5};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

// A pair (L, M) with equal per-point weight sums built by moving a coordinate
// of weight u+v and two coordinates of weights u, v between two points.
std::pair<CodeMatrix, CodeMatrix> swapped_budget_pair(InstanceRng& rng, const Field& f, std::size_t k)
{
    const ProjectiveSpace ps(f, k);
    const std::size_t p = rng.below(ps.size());
    std::size_t r = rng.below(ps.size());
    if (ps.size() > 1)
        while (r == p)
            r = rng.below(ps.size());
    const Rational u = random_weight(rng, 5, 3);
    const Rational v = rng.chance(50) ? u : random_weight(rng, 5, 3);
    std::vector<std::string> labels{"s", "t1", "t2"};
    std::vector<Rational> weights{u + v, u, v};
    std::vector<Vec> lcols{ps.point(p), ps.point(r), ps.point(r)};
    std::vector<Vec> mcols{ps.point(r), ps.point(p), ps.point(p)};
    const std::size_t extra = rng.below(3);
    for (std::size_t i = 0; i < extra; ++i) {
        labels.push_back("x" + std::to_string(i + 1));
        weights.push_back(random_weight(rng, 5, 3));
        Vec col(k, kZero);
        if (rng.chance(80))
            col = ps.point(rng.below(ps.size()));
        lcols.push_back(col);
        mcols.push_back(col);
    }
    auto grid = [&](const std::vector<Vec>& cols) {
        Matrix m(f, k, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const Elem scale = random_nonzero(rng, f);
            for (std::size_t row = 0; row < k; ++row)
                m.set(row, c, f.mul(cols[c][row], scale));
        }
        return m;
    };
    const WeightedSpace space(labels, weights);
    return {CodeMatrix(space, grid(lcols)), CodeMatrix(space, grid(mcols))};
}

// Criterion 1
Outcome identity_suite()
{
    Outcome out;
    const auto start = Clock::now();
    const auto report = run_identity_sweep(20240601, 500);
    const double secs = seconds_since(start);
    std::ostringstream d;
    d << report.trials << " instances;";
    for (const auto& t : report.tallies) {
        d << " " << t.name << " " << t.passed << "/" << t.checks << ";";
        if (t.checks == 0)
            out.fail("no checks for " + t.name);
    }
    d << " " << secs << " s";
    if (report.trials != 500)
        out.fail("wrong trial count");
    if (!report.all_passed())
        out.fail("identity " + report.failing_identity + " failed");
    if (secs >= 60)
        out.fail("too slow");
    if (out.pass)
        out.detail = d.str();
    else
        out.detail += " (" + d.str() + ")";
    return out;
}

// Criterion 2
Outcome criterion_equivalence()
{
    Outcome out;
    InstanceRng rng(777);
    int equivalent = 0, inequivalent = 0, forced = 0, swapped = 0, profiles = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto f = random_field(rng, kOrders);
        const std::size_t k = 1 + rng.below(3);
        CodeMatrix l(WeightedSpace::uniform(1), Matrix(f, 1, 1));
        CodeMatrix m = l;
        switch (trial % 3) {
        case 0: {
            const std::size_t n = 1 + rng.below(6);
            l = CodeMatrix(random_space(rng, n, 10, 10), random_matrix(rng, f, k, n));
            m = CodeMatrix(l.space(), random_isometry(rng, l.space(), f).apply(l.grid()));
            ++forced;
            break;
        }
        case 1: {
            std::tie(l, m) = swapped_budget_pair(rng, f, k);
            ++swapped;
            break;
        }
        default: {
            const std::size_t n = 1 + rng.below(6);
            l = CodeMatrix(random_space(rng, n, 10, 10), random_matrix(rng, f, k, n));
            auto grid = random_isometry(rng, l.space(), f).apply(l.grid());
            // small perturbation, sometimes harmless
            grid.set(rng.below(k), rng.below(n), random_element(rng, f));
            m = CodeMatrix(l.space(), grid);
        }
        }
        const bool bf = locally_equivalent_bruteforce(l, m).equivalent;
        const bool pr = locally_equivalent_projective(l, m).equivalent;
        if (bf != pr) {
            out.fail("brute force and projective criteria disagree at trial " + std::to_string(trial));
            continue;
        }
        if (trial % 3 != 2 && !bf)
            out.fail("constructed pair not locally equivalent at trial " + std::to_string(trial));
        (bf ? equivalent : inequivalent)++;
        for (std::size_t dim = 1; dim < k; ++dim) {
            ++profiles;
            const auto pl = subspace_weight_profile(l, dim);
            const auto pm = subspace_weight_profile(m, dim);
            if ((pl == pm) != bf)
                out.fail("profile at m=" + std::to_string(dim) + " disagrees at trial " + std::to_string(trial));
        }
    }
    if (inequivalent == 0)
        out.fail("no inequivalent pairs generated");
    if (out.pass) {
        std::ostringstream d;
        d << "500 pairs (" << forced << " isometric, " << swapped << " budget-swapped, " << 500 - forced - swapped
          << " perturbed); " << equivalent << " equivalent, " << inequivalent << " not; " << profiles
          << " profile comparisons; 0 discrepancies";
        out.detail = d.str();
    }
    return out;
}

// Criterion 3
Outcome extension_soundness()
{
    Outcome out;
    InstanceRng rng(4242);
    int cases = 0, attempts = 0;
    while (cases < 300 && attempts < 5000) {
        ++attempts;
        const auto f = random_field(rng, kOrders);
        const std::size_t k = 1 + rng.below(3);
        std::optional<std::pair<CodeMatrix, CodeMatrix>> pair;
        if (attempts % 4 == 0) {
            pair = swapped_budget_pair(rng, f, k);
        } else {
            const std::size_t n = 1 + rng.below(6);
            CodeMatrix l(random_space(rng, n, 10, 10), random_matrix(rng, f, k, n));
            CodeMatrix m(l.space(), random_isometry(rng, l.space(), f).apply(l.grid()));
            pair.emplace(std::move(l), std::move(m));
        }
        const auto& [l, m] = *pair;
        if (!locally_equivalent_bruteforce(l, m).equivalent)
            continue;
        if (!udp_check(joint_support(l.grid()), joint_support(m.grid()), l.space()).holds)
            continue;
        ++cases;
        const auto ext = try_extend_to_isometry(l, m);
        if (!ext.isometry) {
            out.fail("extension refused a qualifying pair");
            continue;
        }
        const auto& phi = *ext.isometry;
        if (multiply(l.grid(), phi.matrix(f)) != m.grid())
            out.fail("M != LQ");
        if (!is_isometry(phi, l.space(), f))
            out.fail("is_isometry rejected the output");
        for (const auto& x : oracle::all_vectors(f, l.length()))
            if (vector_weight(phi.apply(x, f), l.space()) != vector_weight(x, l.space())) {
                out.fail("weight not preserved");
                break;
            }
    }
    if (cases < 200)
        out.fail("only " + std::to_string(cases) + " qualifying pairs");
    if (out.pass)
        out.detail = std::to_string(cases) + " locally equivalent pairs with UDP supports; M = LQ, is_isometry and "
                                             "exhaustive weight preservation all hold";
    return out;
}

std::uint64_t monomial_count(std::size_t n, int q)
{
    std::uint64_t c = 1;
    for (std::size_t i = 2; i <= n; ++i)
        c *= i;
    for (std::size_t i = 0; i < n; ++i)
        c *= static_cast<std::uint64_t>(q - 1);
    return c;
}

// Criterion 4
Outcome mep_both_directions()
{
    Outcome out;
    int hamming = 0;
    for (std::size_t n = 1; n <= 10; ++n)
        for (const Rational& c : {Rational(1), Rational(5, 3)}) {
            ++hamming;
            if (!mep_check(WeightedSpace::numbered(std::vector<Rational>(n, c))).holds)
                out.fail("constant weights reported as failing MEP");
        }

    // weight families: multisets from two value pools, each in a few coordinate orders, plus random draws
    std::vector<std::vector<Rational>> families;
    const std::vector<std::vector<Rational>> pools{{1, 2, 3}, {Rational(1, 2), 1, Rational(3, 2), 2, 3}};
    InstanceRng rng(99);
    for (const auto& pool : pools)
        for (std::size_t n = 1; n <= 6; ++n) {
            std::vector<std::size_t> idx(n, 0);
            while (true) {
                std::vector<Rational> w;
                for (auto i : idx)
                    w.push_back(pool[i]);
                families.push_back(w);
                rng.shuffle(w);
                families.push_back(w);
                // next nondecreasing index tuple
                std::size_t j = n;
                while (j > 0 && idx[j - 1] == pool.size() - 1)
                    --j;
                if (j == 0)
                    break;
                ++idx[j - 1];
                for (std::size_t t = j; t < n; ++t)
                    idx[t] = idx[j - 1];
            }
        }
    for (int i = 0; i < 300; ++i)
        families.push_back(random_space(rng, 1 + rng.below(6), 10, 10).weights());

    int failing = 0, searches = 0;
    std::uint64_t maps = 0;
    for (const auto& w : families) {
        const auto space = WeightedSpace::numbered(w);
        const auto report = mep_check(space);
        if (report.holds != udp_check(all_coordinates(space), all_coordinates(space), space).holds)
            out.fail("MEP verdict differs from UDP on the full space");
        if (report.holds)
            continue;
        ++failing;
        if (!report.alpha || !report.beta) {
            out.fail("failing MEP without a witness");
            continue;
        }
        if (vector_weight(*report.alpha, space) != vector_weight(*report.beta, space))
            out.fail("witness vectors have different weights");
        for (int q : kOrders) {
            const auto budget = monomial_count(space.size(), q);
            if (budget > 1'000'000)
                continue;
            const auto search = oracle::search_monomial_maps(*report.alpha, *report.beta, space, Field::of_order(q));
            ++searches;
            maps += search.examined;
            if (search.examined != budget)
                out.fail("search did not cover every monomial map");
            if (search.found)
                out.fail("an isometry maps the witness alpha to beta");
        }
    }
    if (failing == 0)
        out.fail("no UDP-failing weights generated");
    if (out.pass) {
        std::ostringstream d;
        d << hamming << " constant-weight spaces hold; " << failing << " UDP-failing weight vectors, " << searches
          << " exhaustive searches over " << maps << " monomial maps, none maps alpha to beta";
        out.detail = d.str();
    }
    return out;
}

// Criterion 5
Outcome constant_weight_criterion()
{
    Outcome out;
    InstanceRng rng(555);
    int constant = 0, subcodes = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto f = random_field(rng, kOrders);
        const std::size_t k = 1 + rng.below(3);
        std::optional<CodeMatrix> g;
        if (trial % 2 == 0) {
            g = random_constant_weight_code(rng, f, k);
        } else {
            const std::size_t n = k + rng.below(5);
            g.emplace(random_space(rng, n, 4, 2), random_full_rank(rng, f, k, n));
        }
        const auto brute = is_constant_weight_bruteforce(*g);
        const auto sigma = sigma_check(*g);
        if (brute.constant != sigma.is_constant) {
            out.fail("sigma check disagrees with enumeration at trial " + std::to_string(trial));
            continue;
        }
        if (!sigma.is_constant)
            continue;
        ++constant;
        for (std::size_t s = 0; s <= k; ++s)
            for (const auto& d : subspaces(k, s, f)) {
                ++subcodes;
                const auto expected = subspace_weight_formula(static_cast<int>(k), static_cast<int>(s), *sigma.sigma, f.q());
                if (oracle::enumerated_span_weight(multiply(d.basis(), g->grid()), g->space()) != expected)
                    out.fail("subcode weight differs from the closed form");
            }
    }
    const auto simplex = simplex_generator(Field::of_order(2), 3, 1);
    const auto ss = sigma_check(simplex);
    const auto sb = is_constant_weight_bruteforce(simplex);
    const bool simplex_ok = ss.is_constant && ss.sigma == 1 && sb.constant && sb.weight == 4 &&
                            subspace_weight_formula(3, 1, 1, 2) == 4;
    if (!simplex_ok)
        out.fail("binary simplex k=3 does not give sigma 1 and weight 4");
    if (out.pass) {
        std::ostringstream d;
        d << "500 full-rank generators, " << constant << " constant weight, 0 disagreements; " << subcodes
          << " subcodes match the closed form; binary simplex k=3: sigma 1, weight 4";
        out.detail = d.str();
    }
    return out;
}

// Criterion 6
Outcome strict_gap_fixture()
{
    Outcome out;
    const auto doc = parse_instance_file(fs::path(WHAM_FIXTURE_DIR) / "instances" / "strict_gap.json");
    const auto g = doc.code("generator");
    const ProjectiveSpace ps(g.field(), g.k());
    std::vector<std::vector<Rational>> classes(ps.size());
    const auto cls = point_classes(g, ps);
    for (std::size_t i = 0; i < cls.size(); ++i)
        if (cls[i])
            classes[*cls[i]].push_back(g.space().weight(i));
    for (auto& c : classes)
        std::sort(c.begin(), c.end());
    if (classes != std::vector<std::vector<Rational>>{{2}, {1, 1}, {2}} || g.field().q() != 2 || g.k() != 2)
        out.fail("fixture does not have column classes {2}, {1,1}, {2} over GF(2), k=2");
    const auto sigma = sigma_check(g);
    if (!sigma.is_constant || sigma.sigma != 2)
        out.fail("sigma check does not give sigma 2");
    if (!is_constant_weight_bruteforce(g).constant)
        out.fail("enumeration finds non-constant weight");
    const auto multiset = multiset_condition_check(g);
    if (multiset.holds)
        out.fail("multiset condition unexpectedly holds");
    const auto chi = joint_support(g.grid());
    if (udp_check(chi, chi, g.space()).holds)
        out.fail("UDP unexpectedly holds on the support");
    if (out.pass)
        out.detail = "sigma 2, constant weight by enumeration, multiset condition fails at weight " +
                     to_string(*multiset.weight) + ", UDP fails on the support";
    return out;
}

// Criterion 7
Outcome structural_counts()
{
    Outcome out;
    int cases = 0;
    for (int q : kOrders) {
        const auto f = Field::of_order(q);
        for (std::size_t k = 1; k <= 4; ++k) {
            for (std::size_t m = 0; m <= k; ++m) {
                ++cases;
                const auto subs = subspaces(k, m, f);
                if (BigInt(subs.size()) != qbinom(static_cast<int>(k), static_cast<int>(m), q))
                    out.fail("subspace count differs from qbinom");
                std::set<std::vector<std::uint64_t>> distinct;
                for (const auto& s : subs) {
                    std::vector<std::uint64_t> key;
                    for (const auto& row : s.basis().row_list())
                        key.push_back(encode(row, q));
                    distinct.insert(key);
                    if (s.dim() != m)
                        out.fail("subspace of wrong dimension");
                }
                if (distinct.size() != subs.size())
                    out.fail("duplicate subspaces");
            }
            std::uint64_t qk = 1;
            for (std::size_t i = 0; i < k; ++i)
                qk *= static_cast<std::uint64_t>(q);
            if (projective_points(k, f).size() != (qk - 1) / static_cast<std::uint64_t>(q - 1))
                out.fail("projective point count differs");
        }
    }
    if (out.pass)
        out.detail = std::to_string(cases) + " (q, k, m) subspace counts and 16 projective point counts match";
    return out;
}

struct Process {
    int code = -1;
    std::string out;
};

std::string quote(const std::string& s)
{
    std::string r = "'";
    for (char c : s) {
        if (c == '\'')
            r += "'\\''";
        else
            r += c;
    }
    return r + "'";
}

Process run_cli_binary(const std::vector<std::string>& args)
{
    std::string cmd = quote(WHAM_CLI_PATH);
    for (const auto& a : args)
        cmd += " " + quote(a);
    cmd += " 2>/dev/null";
    Process p;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return p;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        p.out.append(buf.data(), n);
    const int status = pclose(pipe);
    p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return p;
}

// Criterion 8
Outcome cli_contract()
{
    Outcome out;
    const auto start = Clock::now();
    const fs::path dir(WHAM_FIXTURE_DIR);
    const auto scratch = fs::temp_directory_path() / "wham-acceptance";
    fs::create_directories(scratch);
    Json manifest;
    std::ifstream(dir / "manifest.json") >> manifest;
    int runs = 0, replays = 0;
    for (const auto& entry : manifest) {
        std::vector<std::string> args;
        for (const auto& a : entry["args"]) {
            auto s = a.get<std::string>();
            if (!s.empty() && s[0] == '@')
                s = (dir / s.substr(1)).string();
            args.push_back(s);
        }
        const int expected = entry["exit"].get<int>();
        std::string joined;
        for (const auto& a : entry["args"])
            joined += " " + a.get<std::string>();
        const auto first = run_cli_binary(args);
        const auto second = run_cli_binary(args);
        runs += 2;
        if (first.code != expected) {
            out.fail("exit " + std::to_string(first.code) + " != " + std::to_string(expected) + " for" + joined);
            continue;
        }
        if (first.out != second.out)
            out.fail("non-deterministic output for" + joined);
        Json doc;
        try {
            doc = Json::parse(first.out);
        } catch (const std::exception&) {
            out.fail("output is not a single JSON document for" + joined);
            continue;
        }
        const std::string status = doc.value("status", "");
        const char* want = expected == 0 ? "holds" : expected == 1 ? "fails" : "error";
        if (status != want)
            out.fail("status '" + status + "' does not match exit code for" + joined);
        if (expected != 1)
            continue;
        if (!doc.contains("witness")) {
            out.fail("failure without witness for" + joined);
            continue;
        }
        if (!doc["witness"].contains("instance"))
            continue;
        const auto replay_path = scratch / ("replay-" + std::to_string(replays) + ".json");
        std::ofstream(replay_path) << doc["witness"]["instance"].dump(2);
        auto replay_args = args;
        for (std::size_t i = 0; i + 1 < replay_args.size(); ++i)
            if (replay_args[i] == "--instance")
                replay_args[i + 1] = replay_path.string();
        ++replays;
        if (run_cli_binary(replay_args).code != 1)
            out.fail("witness replay does not reproduce the failure for" + joined);
    }
    // round trip of every stored instance document
    int round_trips = 0;
    for (const auto& file : fs::directory_iterator(dir / "instances")) {
        const auto doc = parse_instance_file(file.path());
        if (!(parse_instance(to_json(doc)) == doc))
            out.fail("round trip changed " + file.path().filename().string());
        ++round_trips;
    }
    const double secs = seconds_since(start);
    if (secs >= 180)
        out.fail("corpus run took too long");
    if (out.pass) {
        std::ostringstream d;
        d << manifest.size() << " commands run twice (" << runs << " runs), byte-identical; " << replays
          << " witnesses replayed; " << round_trips << " documents round-trip; " << secs << " s";
        out.detail = d.str();
    }
    return out;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 identity suite", identity_suite},
        {"2 equivalence criteria agree", criterion_equivalence},
        {"3 isometry extension soundness", extension_soundness},
        {"4 extension property both directions", mep_both_directions},
        {"5 constant weight criterion", constant_weight_criterion},
        {"6 strict-gap fixture", strict_gap_fixture},
        {"7 structural counts", structural_counts},
        {"8 command-line contract", cli_contract},
    };
    bool all = true;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << ": " << o.detail << std::endl;
    }
    return all ? 0 : 1;
}
