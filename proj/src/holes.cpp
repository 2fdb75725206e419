#include "chowq/holes.hpp"

#include "chowq/correspondence.hpp"
#include "chowq/errors.hpp"
#include "chowq/ring.hpp"
#include "chowq/steenrod.hpp"

#include <algorithm>
#include <thread>

namespace chowq {

namespace {

Cycle single(const Geometry& g, std::vector<Factor> factors)
{
    return Cycle::from_basis(g, BasisElement{std::move(factors)});
}

} // namespace

HoleParams HoleParams::make(int n, int m, int p)
{
    require(n >= 4, Errc::invalid_argument, "need n >= 4 (got " + std::to_string(n) + ")");
    require(m >= 3 && m <= n - 1, Errc::invalid_argument, "need 3 <= m <= n-1 (got m=" + std::to_string(m) + ")");
    require(p >= 1 && p <= m - 2, Errc::invalid_argument, "need 1 <= p <= m-2 (got p=" + std::to_string(p) + ")");
    require(n <= 7, Errc::invalid_argument, "n > 7 exceeds the supported quadric dimension");
    HoleParams h;
    h.n = n;
    h.m = m;
    h.p = p;
    h.a = 1 << (p - 1);
    h.b = 1 << (m - 1);
    h.c = 1 << m;
    h.d = (1 << n) - (1 << (m - 1)) + (1 << (p - 1)) - 1;
    h.D = 2 * h.d;
    require((h.d - h.a + 1) % h.b == 0, Errc::invalid_argument, "b does not divide d-a+1");
    require((h.d - h.b - h.a + 1) % h.c == 0, Errc::invalid_argument, "c does not divide d-b-a+1");
    require(h.b % (4 * h.a) == 0, Errc::invalid_argument, "4a does not divide b");
    h.N_b = (h.d - h.a + 1) / h.b;
    h.N_c = (h.d - h.b - h.a + 1) / h.c;
    h.J = (h.c - h.b) / h.a;
    return h;
}

SplittingData forced_witt_sequence(int n, int dim)
{
    require(n >= 2 && n <= 30, Errc::invalid_argument, "n out of range");
    require(dim > 0 && dim % 2 == 0, Errc::invalid_argument, "dimension must be a positive even integer");
    const std::string bad = "dimension " + std::to_string(dim) + " is not 2^n + ... + 2^m + 2^p for n = " + std::to_string(n);
    require(dim >> n == 1, Errc::invalid_argument, bad);
    // Bits below n: a run n-1, n-2, …, m followed by a single bit p <= m-2.
    int bit = n - 1;
    while (bit >= 0 && ((dim >> bit) & 1))
        --bit;
    const int m = bit + 1;
    int p = -1;
    for (int k = bit; k >= 0; --k)
        if ((dim >> k) & 1) {
            require(p < 0, Errc::invalid_argument, bad);
            p = k;
        }
    require(p >= 1 && p <= m - 2 && m <= n - 1, Errc::invalid_argument, bad);
    SplittingData s;
    s.witt_indices.push_back(1 << (p - 1));
    for (int k = m - 1; k <= n - 1; ++k)
        s.witt_indices.push_back(1 << k);
    return s;
}

Cycle build_mu_zero(const HoleParams& h)
{
    Geometry g = h.geometry();
    Cycle sum(g, 3);
    for (int i = 1; i <= h.N_b; ++i)
        sum = sum + single(g, {Factor::h(0), Factor::h((i - 1) * h.b + h.a), Factor::l(i * h.b + h.a - 1)});
    return sym(sum);
}

Cycle build_chi(const HoleParams& h, int j)
{
    require(j >= 1 && j <= h.J, Errc::invalid_argument, "chi index " + std::to_string(j) + " outside [1, " + std::to_string(h.J) + "]");
    Geometry g = h.geometry();
    Cycle sum(g, 2);
    for (int i = 1; i <= h.N_c; ++i)
        sum = sum + single(g, {Factor::h((i - 1) * h.c + h.b + h.a), Factor::l(i * h.c + h.b + h.a - 1)});
    const int e[2] = {(j - 1) * h.a, h.c - h.b - j * h.a};
    Cycle inner = mul(sym(sum), h_power_product(g, e));
    return external_product(single(g, {Factor::h(h.a)}), inner);
}

Cycle xi_bilinear(const Cycle& x, const Cycle& y, const HoleParams& h)
{
    require(x.arity() == 3 && y.arity() == 3, Errc::arity_mismatch, "xi is built from arity-3 cycles");
    const Geometry& g = x.geometry();
    const int e[3] = {0, 0, h.b - 1};
    Cycle inner = mul(steenrod_k(x, 2 * h.a), h_power_product(g, e));
    return delta_pullback_q(compose(inner, y));
}

Cycle build_xi(const Cycle& mu, const HoleParams& h)
{
    Cycle xi = xi_bilinear(mu, mu, h);
    if (!xi.is_zero()) {
        auto dim = xi.dimension();
        if (!dim || *dim != h.D + h.b - 2 * h.a - 1)
            throw Error(Errc::family_inconsistent, "xi is not homogeneous of dimension 2d+b-2a-1");
    }
    return xi;
}

Cycle expected_xi_mu_zero(const HoleParams& h)
{
    Geometry g = h.geometry();
    Cycle sum(g, 2);
    for (int i = 1; i <= h.N_b; ++i) {
        sum = sum + single(g, {Factor::h((i - 1) * h.b + h.a), Factor::l(i * h.b - h.a - 1)});
        sum = sum + single(g, {Factor::h((i - 1) * h.b + 3 * h.a), Factor::l(i * h.b + h.a - 1)});
    }
    return sym(sum);
}

BasisElement contradiction_target(const HoleParams& h)
{
    return BasisElement{{Factor::h(h.a), Factor::l(h.b - h.a - 1)}};
}

Cycle case_table_h(const HoleParams& h, int i)
{
    Geometry g = h.geometry();
    require(i >= 0 && i * h.a <= h.d, Errc::invalid_argument, "h^{ia} outside the basis");
    std::vector<int> multiples{i};
    switch (i % 4) {
    case 1: multiples.push_back(i + 1); break;
    case 2: multiples.push_back(i + 2); break;
    case 3:
        multiples.push_back(i + 1);
        multiples.push_back(i + 2);
        break;
    default: break;
    }
    Cycle out(g, 1);
    for (int k : multiples)
        if (k * h.a <= h.d)
            out = out + single(g, {Factor::h(k * h.a)});
    return out;
}

Cycle case_table_l(const HoleParams& h, int i)
{
    Geometry g = h.geometry();
    require(i >= 1 && i * h.a - 1 <= h.d, Errc::invalid_argument, "l_{ia-1} outside the basis");
    std::vector<int> multiples{i};
    switch (i % 4) {
    case 0: multiples.push_back(i - 2); break;
    case 1: multiples.push_back(i - 1); break;
    case 3:
        multiples.push_back(i - 1);
        multiples.push_back(i - 2);
        break;
    default: break;
    }
    Cycle out(g, 1);
    for (int k : multiples)
        if (k * h.a - 1 >= 0)
            out = out + single(g, {Factor::l(k * h.a - 1)});
    return out;
}

namespace {

struct Generators {
    std::vector<Cycle> cycles;
    std::vector<std::string> names;
};

// Order: slot 1 (χ_j), slot 2 (t12 χ_j), slot 3 (t13 χ_j), j ascending.
Generators chi_generators(const HoleParams& h)
{
    Generators out;
    for (int slot = 1; slot <= 3; ++slot)
        for (int j = 1; j <= h.J; ++j) {
            Cycle chi = build_chi(h, j);
            if (slot == 2)
                chi = transpose(chi, 0, 1);
            else if (slot == 3)
                chi = transpose(chi, 0, 2);
            out.cycles.push_back(chi);
            out.names.push_back(slot == 1 ? "chi_" + std::to_string(j)
                                          : "t1" + std::to_string(slot) + "(chi_" + std::to_string(j) + ")");
        }
    return out;
}

Cycle mu_prime_for(const Generators& gens, std::uint64_t mask, const Geometry& g)
{
    TermAccumulator acc(g, 3);
    for (std::size_t k = 0; k < gens.cycles.size(); ++k)
        if ((mask >> k) & 1U)
            acc.add(gens.cycles[k]);
    return acc.finish();
}

nlohmann::json subsets_json(std::uint64_t mask, int J)
{
    nlohmann::json out;
    for (int slot = 0; slot < 3; ++slot) {
        nlohmann::json set = nlohmann::json::array();
        for (int j = 0; j < J; ++j)
            if ((mask >> (slot * J + j)) & 1U)
                set.push_back(j + 1);
        out["A" + std::to_string(slot + 1)] = set;
    }
    return out;
}

struct BruteResult {
    std::uint64_t cases = 0;
    std::uint64_t containing = 0;
    std::optional<std::uint64_t> first_failure;
};

BruteResult run_brute(const HoleParams& h, const Cycle& mu0, const Generators& gens, unsigned jobs)
{
    const Geometry g = h.geometry();
    const Key target = encode(g, contradiction_target(h));
    const std::uint64_t per_slot = std::uint64_t{1} << h.J;
    const std::uint64_t rest = std::uint64_t{1} << (2 * h.J);
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(per_slot)));

    // Worker w owns the A1 subsets congruent to w modulo jobs.
    std::vector<BruteResult> partial(jobs);
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned w = 0; w < jobs; ++w)
        workers.emplace_back([&, w] {
            try {
                BruteResult& res = partial[w];
                for (std::uint64_t a1 = w; a1 < per_slot; a1 += jobs)
                    for (std::uint64_t r = 0; r < rest; ++r) {
                        const std::uint64_t mask = a1 | (r << h.J);
                        Cycle mu = mu0 + mu_prime_for(gens, mask, g);
                        Cycle xi = build_xi(mu, h);
                        ++res.cases;
                        if (xi.contains(target))
                            ++res.containing;
                        else if (!res.first_failure || mask < *res.first_failure)
                            res.first_failure = mask;
                    }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : workers)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    BruteResult total;
    for (const auto& p : partial) {
        total.cases += p.cases;
        total.containing += p.containing;
        if (p.first_failure && (!total.first_failure || *p.first_failure < *total.first_failure))
            total.first_failure = p.first_failure;
    }
    return total;
}

struct BilinearResult {
    bool base = false;
    std::vector<int> mu0_g, g_mu0, linear;
    std::vector<std::vector<int>> gg;
    std::vector<std::pair<int, int>> quadratic;
    bool certified = false;
    bool blockwise_zero = true;
    std::optional<std::uint64_t> counterexample;
};

BilinearResult run_bilinear(const HoleParams& h, const Cycle& mu0, const Generators& gens, unsigned jobs)
{
    const Geometry g = h.geometry();
    const Key target = encode(g, contradiction_target(h));
    auto tau = [&](const Cycle& x, const Cycle& y) { return xi_bilinear(x, y, h).contains(target) ? 1 : 0; };
    const int n = static_cast<int>(gens.cycles.size());
    BilinearResult res;
    res.base = tau(mu0, mu0) == 1;
    res.mu0_g.resize(static_cast<std::size_t>(n));
    res.g_mu0.resize(static_cast<std::size_t>(n));
    res.linear.resize(static_cast<std::size_t>(n));
    res.gg.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));

    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max(1, n))));
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned w = 0; w < jobs; ++w)
        workers.emplace_back([&, w] {
            try {
                for (int x = static_cast<int>(w); x < n; x += static_cast<int>(jobs)) {
                    const auto ux = static_cast<std::size_t>(x);
                    res.mu0_g[ux] = tau(mu0, gens.cycles[ux]);
                    res.g_mu0[ux] = tau(gens.cycles[ux], mu0);
                    for (int y = 0; y < n; ++y)
                        res.gg[ux][static_cast<std::size_t>(y)] = tau(gens.cycles[ux], gens.cycles[static_cast<std::size_t>(y)]);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : workers)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    for (int x = 0; x < n; ++x) {
        const auto ux = static_cast<std::size_t>(x);
        res.linear[ux] = res.mu0_g[ux] ^ res.g_mu0[ux] ^ res.gg[ux][ux];
        res.blockwise_zero = res.blockwise_zero && !res.mu0_g[ux] && !res.g_mu0[ux];
        for (int y = 0; y < n; ++y) {
            res.blockwise_zero = res.blockwise_zero && !res.gg[ux][static_cast<std::size_t>(y)];
            if (x < y && (res.gg[ux][static_cast<std::size_t>(y)] ^ res.gg[static_cast<std::size_t>(y)][ux]))
                res.quadratic.emplace_back(x, y);
        }
    }
    // Over GF(2) the target coefficient is the multilinear polynomial
    // base + Σ linear_g x_g + Σ quadratic_{g,g'} x_g x_g', constant iff all
    // non-constant coefficients vanish.
    const bool linear_zero = std::all_of(res.linear.begin(), res.linear.end(), [](int v) { return v == 0; });
    res.certified = res.base && linear_zero && res.quadratic.empty();
    if (!res.base)
        res.counterexample = 0;
    else if (!linear_zero)
        res.counterexample = std::uint64_t{1} << (std::find(res.linear.begin(), res.linear.end(), 1) - res.linear.begin());
    else if (!res.quadratic.empty())
        res.counterexample = (std::uint64_t{1} << res.quadratic.front().first) | (std::uint64_t{1} << res.quadratic.front().second);
    return res;
}

} // namespace

Certificate verify_contradiction(const HoleParams& h, const ContradictionOptions& options)
{
    const Geometry g = h.geometry();
    const SplittingData witt = forced_witt_sequence(h.n, h.dim_form());
    const Cycle mu0 = build_mu_zero(h);
    const Generators gens = chi_generators(h);
    const Cycle xi0 = build_xi(mu0, h);
    const Cycle expected = expected_xi_mu_zero(h);
    const BasisElement target = contradiction_target(h);
    const int total_bits = 3 * h.J;
    unsigned jobs = options.jobs ? options.jobs : std::max(1U, std::thread::hardware_concurrency());

    Method method = options.method;
    if (method == Method::automatic)
        method = total_bits > options.threshold_bits ? Method::bilinear : Method::brute;
    require(!(method == Method::brute && total_bits > 40), Errc::invalid_argument,
            "brute force over 2^" + std::to_string(total_bits) + " cases is not feasible");
    const bool want_brute = method == Method::brute || (options.cross_check && total_bits <= 40);
    const bool want_bilinear = method == Method::bilinear || options.cross_check;

    nlohmann::json cert;
    cert["kind"] = "contradiction-certificate";
    cert["params"] = {{"n", h.n}, {"m", h.m}, {"p", h.p}, {"a", h.a}, {"b", h.b}, {"c", h.c},
                      {"d", h.d}, {"D", h.D}, {"N_b", h.N_b}, {"N_c", h.N_c}, {"J", h.J}};
    cert["dim_form"] = h.dim_form();
    cert["witt_indices"] = witt.witt_indices;
    cert["target"] = to_string(target);
    cert["method"] = method == Method::brute ? "brute" : "bilinear";
    cert["mu0"] = {{"cycle", render_cycle(mu0)}, {"terms", mu0.size()}};
    nlohmann::json chis = nlohmann::json::array();
    for (std::size_t k = 0; k < gens.cycles.size(); ++k)
        chis.push_back({{"name", gens.names[k]}, {"cycle", render_cycle(gens.cycles[k])}});
    cert["generators"] = chis;
    cert["xi_mu0"] = {{"cycle", render_cycle(xi0)},
                      {"terms", xi0.size()},
                      {"dimension", h.D + h.b - 2 * h.a - 1},
                      {"matches_closed_form", xi0 == expected},
                      {"contains_target", xi0.contains(target)}};
    cert["cases"] = std::to_string(std::uint64_t{1} << std::min(total_bits, 63));

    bool certified = xi0 == expected && xi0.contains(target);
    std::optional<bool> brute_verdict, bilinear_verdict;
    nlohmann::json counterexample = nullptr;

    if (want_brute) {
        BruteResult br = run_brute(h, mu0, gens, jobs);
        brute_verdict = !br.first_failure.has_value();
        cert["brute"] = {{"cases", br.cases}, {"cases_containing_target", br.containing}, {"all_contain_target", *brute_verdict}};
        if (br.first_failure && counterexample.is_null()) {
            Cycle mu = mu0 + mu_prime_for(gens, *br.first_failure, g);
            counterexample = subsets_json(*br.first_failure, h.J);
            counterexample["mu_prime"] = render_cycle(mu_prime_for(gens, *br.first_failure, g));
            counterexample["xi"] = render_cycle(build_xi(mu, h));
        }
    }
    if (want_bilinear) {
        BilinearResult bl = run_bilinear(h, mu0, gens, jobs);
        bilinear_verdict = bl.certified;
        nlohmann::json quad = nlohmann::json::array();
        for (auto [x, y] : bl.quadratic)
            quad.push_back({gens.names[static_cast<std::size_t>(x)], gens.names[static_cast<std::size_t>(y)]});
        cert["bilinear"] = {{"base", bl.base},
                            {"mu0_g", bl.mu0_g},
                            {"g_mu0", bl.g_mu0},
                            {"g_g", bl.gg},
                            {"linear", bl.linear},
                            {"quadratic_nonzero", quad},
                            {"blockwise_zero", bl.blockwise_zero},
                            {"certified", bl.certified}};
        if (bl.counterexample && counterexample.is_null()) {
            Cycle mu = mu0 + mu_prime_for(gens, *bl.counterexample, g);
            counterexample = subsets_json(*bl.counterexample, h.J);
            counterexample["mu_prime"] = render_cycle(mu_prime_for(gens, *bl.counterexample, g));
            counterexample["xi"] = render_cycle(build_xi(mu, h));
        }
    }
    if (brute_verdict)
        certified = certified && *brute_verdict;
    if (bilinear_verdict)
        certified = certified && *bilinear_verdict;
    if (brute_verdict && bilinear_verdict)
        cert["methods_agree"] = *brute_verdict == *bilinear_verdict;
    cert["counterexample"] = counterexample;
    cert["certified"] = certified;
    return {certified, cert};
}

} // namespace chowq
