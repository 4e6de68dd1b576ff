#include "heun/belyi.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "heun/expr.hpp"

namespace heun {

long RamificationData::degree() const {
    return std::accumulate(over0.begin(), over0.end(), 0L);
}

bool RamificationData::riemann_hurwitz_holds() const {
    long n = degree();
    if (std::accumulate(over1.begin(), over1.end(), 0L) != n) return false;
    if (std::accumulate(over_inf.begin(), over_inf.end(), 0L) != n) return false;
    long total = 0;
    for (long e : over0) total += e - 1;
    for (long e : over1) total += e - 1;
    for (long e : over_inf) total += e - 1;
    return total == 2 * n - 2;
}

BelyiMap verify_belyi(const Poly& j1, const Poly& j2, const ExactScalar& lead) {
    if (j2.is_zero()) throw error("division by zero");
    if (lead.is_zero()) throw error("zero leading constant");
    if (j1.is_zero()) throw error("zero numerator");
    if (!j1.lc().is_one() || !j2.lc().is_one()) throw error("j1 and j2 must be monic");
    int N = j1.degree(), M = j2.degree();
    if (N <= M) throw error("degree condition violated (apply Moebius first)");
    if (poly_gcd(j1, j2).degree() != 0) throw error("not coprime");
    BelyiMap m;
    m.j1 = j1;
    m.j2 = j2;
    m.lead = lead;
    m.N = N;
    m.M = M;
    Poly lam = radical(j1);
    if (M > 0) lam = lam * radical(j2);
    lam = lam * radical(m.w());
    if (lam.degree() != N + 1)
        throw error("not Belyi: deg Lambda = " + std::to_string(lam.degree()) +
                    " != " + std::to_string(N + 1));
    m.lambda = lam;
    return m;
}

BelyiMap make_belyi(const Poly& J1, const Poly& J2) {
    if (J2.is_zero()) throw error("division by zero");
    if (J1.is_zero()) throw error("zero numerator");
    ExactScalar lead = J1.lc() / J2.lc();
    return verify_belyi(J1.monic(), J2.monic(), lead);
}

namespace {
std::vector<long> fiber_multiplicities(const Poly& p) {
    std::vector<long> out;
    for (const auto& [mult, factor] : squarefree_decomposition(p))
        for (int i = 0; i < factor.degree(); ++i) out.push_back(mult);
    std::sort(out.rbegin(), out.rend());
    return out;
}
}  // namespace

RamificationData ramification_data(const BelyiMap& m) {
    RamificationData r;
    r.over0 = fiber_multiplicities(m.j1);
    r.over1 = fiber_multiplicities(m.w());
    if (m.M > 0) r.over_inf = fiber_multiplicities(m.j2);
    r.inf_index = m.N - m.M;
    r.over_inf.push_back(r.inf_index);
    std::sort(r.over_inf.rbegin(), r.over_inf.rend());
    return r;
}

RamificationData make_ramification(std::vector<long> over0, std::vector<long> over1,
                                   std::vector<long> over_inf_finite, long inf_index) {
    RamificationData r;
    r.over0 = std::move(over0);
    r.over1 = std::move(over1);
    r.over_inf = std::move(over_inf_finite);
    r.inf_index = inf_index;
    r.over_inf.push_back(inf_index);
    std::sort(r.over0.rbegin(), r.over0.rend());
    std::sort(r.over1.rbegin(), r.over1.rend());
    std::sort(r.over_inf.rbegin(), r.over_inf.rend());
    return r;
}

namespace {
bool fiber_ok(const std::vector<long>& indices, IndexConstraint c) {
    if (!c) return true;
    for (long e : indices)
        if (e % *c == 0 && e != *c) return false;
    return true;
}
}  // namespace

bool check_index_constraints(const RamificationData& r, IndexConstraint A, IndexConstraint B,
                             IndexConstraint C) {
    return fiber_ok(r.over0, A) && fiber_ok(r.over1, B) && fiber_ok(r.over_inf, C);
}

std::vector<SingularPoint> singular_points(const BelyiMap& m, IndexConstraint A,
                                           IndexConstraint B, IndexConstraint C,
                                           const FieldSpec& fs_in) {
    FieldSpec fs = FieldSpec::join(
        fs_in, FieldSpec::join(FieldSpec::join(m.j1.field(), m.j2.field()), m.lead.field()));
    std::vector<SingularPoint> out;
    auto add_fiber = [&](const Poly& p, Fiber fiber, IndexConstraint c) {
        for (const auto& [mult, factor] : squarefree_decomposition(p)) {
            if (c && mult == *c) continue;  // index equals the constraint: regular point
            SingularPoint sp;
            sp.fiber = fiber;
            sp.index = mult;
            sp.factor = factor;
            sp.roots = split_roots(factor, FieldSpec::join(fs, factor.field()));
            out.push_back(std::move(sp));
        }
    };
    add_fiber(m.j1, Fiber::zero, A);
    add_fiber(m.w(), Fiber::one, B);
    if (m.M > 0) add_fiber(m.j2, Fiber::infinity, C);
    SingularPoint inf;
    inf.fiber = Fiber::infinity;
    inf.index = m.N - m.M;
    inf.at_infinity = true;
    out.push_back(std::move(inf));
    return out;
}

FamilyClassification classify_family(const RamificationData& r) {
    // Candidate constraints per fiber: observed indices (a point removed by a
    // constraint has index equal to it) plus no-constraint.
    auto candidates = [](const std::vector<long>& fiber) {
        std::vector<IndexConstraint> cs{std::nullopt};
        std::set<long> seen(fiber.begin(), fiber.end());
        for (long v : seen) cs.push_back(v);
        return cs;
    };
    auto build = [&](IndexConstraint A, IndexConstraint B,
                     IndexConstraint C) -> std::optional<FamilyClassification> {
        if (!check_index_constraints(r, A, B, C)) return std::nullopt;
        FamilyClassification fc;
        fc.A = A;
        fc.B = B;
        fc.C = C;
        for (long e : r.over0) (A && e == *A) ? ++fc.r : ++fc.r1;
        for (long e : r.over1) (B && e == *B) ? ++fc.s : ++fc.s1;
        bool dropped = false;  // the point at infinity is never removed
        for (long e : r.over_inf) {
            if (!dropped && e == r.inf_index) {
                dropped = true;
                ++fc.t1;
                continue;
            }
            (C && e == *C) ? ++fc.t : ++fc.t1;
        }
        if (fc.r1 + fc.s1 + fc.t1 != 4) return std::nullopt;
        fc.free_params =
            3 - ((A != std::nullopt) + (B != std::nullopt) + (C != std::nullopt));
        // Branched-cover bound N <= r + s + t + 2.
        if (r.degree() > fc.r + fc.s + fc.t + 2)
            throw error("ramification count exceeds the cover bound");
        return fc;
    };
    for (int constraints = 0; constraints <= 3; ++constraints) {
        for (IndexConstraint A : candidates(r.over0)) {
            for (IndexConstraint B : candidates(r.over1)) {
                for (IndexConstraint C : candidates(r.over_inf)) {
                    int used =
                        (A != std::nullopt) + (B != std::nullopt) + (C != std::nullopt);
                    if (used != constraints) continue;
                    if (auto fc = build(A, B, C)) return *fc;
                }
            }
        }
    }
    throw error("not Heun-compatible");
}

// ---------------------------------------------------------------------------
// Permutation-triple counting.

namespace {

using Perm = std::vector<int>;  // images 0-based

Perm compose(const Perm& f, const Perm& g) {  // (f*g)(x) = f(g(x))
    Perm h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[i] = f[static_cast<size_t>(g[i])];
    return h;
}

Perm inverse(const Perm& f) {
    Perm h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[static_cast<size_t>(f[i])] = static_cast<int>(i);
    return h;
}

std::vector<long> cycle_type(const Perm& f) {
    std::vector<long> out;
    std::vector<bool> seen(f.size(), false);
    for (size_t i = 0; i < f.size(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(f[j]);
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

bool transitive_pair(const Perm& g1, const Perm& g2) {
    size_t n = g1.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int x, int y) { parent[static_cast<size_t>(find(x))] = find(y); };
    for (size_t i = 0; i < n; ++i) {
        unite(static_cast<int>(i), g1[i]);
        unite(static_cast<int>(i), g2[i]);
    }
    int root = find(0);
    for (size_t i = 1; i < n; ++i)
        if (find(static_cast<int>(i)) != root) return false;
    return true;
}

void permutations_of_type(int n, const std::vector<long>& type, std::vector<Perm>& out) {
    Perm base(static_cast<size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    std::vector<long> sorted = type;
    std::sort(sorted.rbegin(), sorted.rend());
    // enumerate all permutations, filter by cycle type (n <= 8)
    Perm p = base;
    do {
        if (cycle_type(p) == sorted) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

Perm conjugate(const Perm& g, const Perm& s) {  // s g s^{-1}
    Perm h(g.size());
    for (size_t i = 0; i < g.size(); ++i)
        h[static_cast<size_t>(s[i])] = s[static_cast<size_t>(g[i])];
    return h;
}

}  // namespace

long count_triples(const std::vector<long>& ct0, const std::vector<long>& ct1,
                   const std::vector<long>& ct_inf) {
    auto check_partition = [](const std::vector<long>& t, long n) {
        long sum = 0;
        for (long v : t) {
            if (v < 1) throw error("cycle type entries must be positive");
            sum += v;
        }
        if (sum != n) throw error("cycle type is not a partition of the degree");
    };
    long n = std::accumulate(ct0.begin(), ct0.end(), 0L);
    if (n < 1 || n > 8) throw error("triple counting limited to degree <= 8");
    check_partition(ct0, n);
    check_partition(ct1, n);
    check_partition(ct_inf, n);

    // Fix g1 as one representative of its class; the classes of triples with
    // g1 g2 g3 = id correspond to orbits of {g2 : types match} under
    // conjugation by the centralizer of g1.
    std::vector<Perm> class0;
    permutations_of_type(static_cast<int>(n), ct0, class0);
    if (class0.empty()) return 0;
    Perm g1 = class0.front();

    std::vector<Perm> centralizer;
    {
        Perm s(static_cast<size_t>(n));
        std::iota(s.begin(), s.end(), 0);
        do {
            if (conjugate(g1, s) == g1) centralizer.push_back(s);
        } while (std::next_permutation(s.begin(), s.end()));
    }

    std::vector<Perm> class1;
    permutations_of_type(static_cast<int>(n), ct1, class1);
    std::vector<long> inf_sorted = ct_inf;
    std::sort(inf_sorted.rbegin(), inf_sorted.rend());

    std::set<Perm> seen;
    long count = 0;
    for (const Perm& g2 : class1) {
        if (seen.count(g2)) continue;
        // g3 = (g1 g2)^{-1}
        Perm g3 = inverse(compose(g1, g2));
        if (cycle_type(g3) != inf_sorted) continue;
        if (!transitive_pair(g1, g2)) continue;
        ++count;
        for (const Perm& s : centralizer) seen.insert(conjugate(g2, s));
    }
    return count;
}

}  // namespace heun
