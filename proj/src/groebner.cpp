#include "resloc/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "resloc/errors.hpp"

namespace resloc {

namespace {

// Basis element with its cofactor row over the original generators.
struct Tracked {
    MultiPoly p;
    std::vector<MultiPoly> cof;
    Monomial lm;
    GaussianRational lc;

    void refresh(const MonomialOrder& order) { std::tie(lm, lc) = p.leading_term(order); }

    void make_monic() {
        if (lc == GaussianRational(1)) return;
        const GaussianRational inv = lc.inverse();
        p = p.scaled(inv);
        for (auto& c : cof) c = c.scaled(inv);
        lc = GaussianRational(1);
    }
};

struct Reduction {
    MultiPoly remainder;
    std::vector<MultiPoly> consumed;  // over original generators
};

// Full division: p = remainder + sum_j consumed[j] * f_j, with no remainder
// monomial divisible by any basis leading term.
Reduction reduce_full(const MultiPoly& p, const std::vector<Tracked>& basis,
                      const MonomialOrder& order, std::size_t ngens) {
    const std::size_t nv = p.nvars();
    Reduction out{MultiPoly::zero(nv), std::vector<MultiPoly>(ngens, MultiPoly::zero(nv))};
    MultiPoly work = p;
    while (!work.is_zero()) {
        const auto [lm, lc] = work.leading_term(order);
        const Tracked* reducer = nullptr;
        for (const Tracked& g : basis) {
            if (g.lm.divides(lm)) {
                reducer = &g;
                break;
            }
        }
        if (reducer == nullptr) {
            out.remainder.add_term(lm, lc);
            work.add_term(lm, -lc);
            continue;
        }
        const Monomial qm = lm / reducer->lm;
        const GaussianRational qc = lc / reducer->lc;
        work -= reducer->p.times_term(qm, qc);
        for (std::size_t j = 0; j < ngens; ++j)
            out.consumed[j] += reducer->cof[j].times_term(qm, qc);
    }
    return out;
}

Tracked s_polynomial(const Tracked& a, const Tracked& b, const MonomialOrder& order) {
    const Monomial l = lcm(a.lm, b.lm);
    const Monomial ma = l / a.lm;
    const Monomial mb = l / b.lm;
    const GaussianRational ca = a.lc.inverse();
    const GaussianRational cb = b.lc.inverse();
    Tracked s;
    s.p = a.p.times_term(ma, ca) - b.p.times_term(mb, cb);
    s.cof.reserve(a.cof.size());
    for (std::size_t j = 0; j < a.cof.size(); ++j)
        s.cof.push_back(a.cof[j].times_term(ma, ca) - b.cof[j].times_term(mb, cb));
    if (!s.p.is_zero()) s.refresh(order);
    return s;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] > 0 && b.exps[i] > 0) return false;
    return true;
}

// Pending S-pairs, popped by ascending lcm degree (normal strategy).
struct PairQueue {
    using Key = std::tuple<unsigned long, std::vector<std::uint32_t>, std::size_t, std::size_t>;
    std::set<Key> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_ids;

    void push(std::size_t i, std::size_t j, const Monomial& l) {
        pending.emplace(l.total_degree(), l.exps, i, j);
        pending_ids.emplace(i, j);
    }
    bool empty() const { return pending.empty(); }
    std::pair<std::size_t, std::size_t> pop() {
        auto it = pending.begin();
        auto ij = std::make_pair(std::get<2>(*it), std::get<3>(*it));
        pending.erase(it);
        pending_ids.erase(ij);
        return ij;
    }
    bool done(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        return pending_ids.find({i, j}) == pending_ids.end();
    }
};

std::vector<Tracked> to_tracked(const TrackedBasis& tb) {
    std::vector<Tracked> out;
    out.reserve(tb.basis.size());
    for (std::size_t k = 0; k < tb.basis.size(); ++k) {
        Tracked t{tb.basis[k], tb.cofactors[k], {}, {}};
        t.refresh(tb.order);
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

TrackedBasis buchberger(const std::vector<MultiPoly>& f, const MonomialOrder& order,
                        const BuchbergerLimits& limits) {
    if (f.empty()) throw DimensionMismatch("empty generator list");
    const std::size_t nv = f.front().nvars();
    const std::size_t n = f.size();
    for (const MultiPoly& p : f) {
        if (p.nvars() != nv) throw DimensionMismatch("generator variable counts differ");
        if (p.is_zero()) throw DimensionMismatch("zero generator");
    }

    std::vector<Tracked> basis;
    PairQueue queue;
    auto append = [&](Tracked t) {
        t.refresh(order);
        t.make_monic();
        const std::size_t id = basis.size();
        for (std::size_t i = 0; i < id; ++i) queue.push(i, id, lcm(basis[i].lm, t.lm));
        basis.push_back(std::move(t));
        if (basis.size() > limits.max_basis_size)
            throw ResourceLimit("basis size cap exceeded");
    };

    for (std::size_t j = 0; j < n; ++j) {
        Tracked t;
        t.p = f[j];
        t.cof.assign(n, MultiPoly::zero(nv));
        t.cof[j] = MultiPoly::constant(nv, 1);
        append(std::move(t));
    }

    while (!queue.empty()) {
        const auto [i, j] = queue.pop();
        const Tracked& a = basis[i];
        const Tracked& b = basis[j];
        if (coprime(a.lm, b.lm)) continue;  // product criterion
        const Monomial l = lcm(a.lm, b.lm);
        bool chained = false;  // chain criterion
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            chained = basis[k].lm.divides(l) && queue.done(i, k) && queue.done(j, k);
        }
        if (chained) continue;

        Tracked s = s_polynomial(a, b, order);
        if (s.p.is_zero()) continue;
        Reduction red = reduce_full(s.p, basis, order, n);
        if (red.remainder.is_zero()) continue;

        Tracked fresh;
        fresh.p = std::move(red.remainder);
        fresh.cof.reserve(n);
        for (std::size_t g = 0; g < n; ++g) fresh.cof.push_back(s.cof[g] - red.consumed[g]);
        if (fresh.p.total_degree() > limits.max_degree)
            throw ResourceLimit("basis degree cap exceeded");
        append(std::move(fresh));
    }

    // Minimalize: drop elements whose leading monomial another one divides.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (basis[j].lm.divides(basis[i].lm))
                redundant = basis[i].lm != basis[j].lm || j < i;
        }
        if (!redundant) keep.push_back(i);
    }

    // Tail-reduce each survivor against the others: reduced Groebner basis.
    std::vector<Tracked> reduced;
    reduced.reserve(keep.size());
    for (std::size_t idx : keep) reduced.push_back(std::move(basis[idx]));
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Tracked> others;
        others.reserve(reduced.size() - 1);
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        Reduction red = reduce_full(reduced[i].p, others, order, n);
        Tracked t;
        t.p = std::move(red.remainder);
        t.cof.reserve(n);
        for (std::size_t g = 0; g < n; ++g) t.cof.push_back(reduced[i].cof[g] - red.consumed[g]);
        t.refresh(order);
        t.make_monic();
        reduced[i] = std::move(t);
    }

    TrackedBasis out;
    out.generators = f;
    out.order = order;
    for (Tracked& t : reduced) {
        out.basis.push_back(std::move(t.p));
        out.cofactors.push_back(std::move(t.cof));
    }
    return out;
}

std::pair<MultiPoly, std::vector<MultiPoly>> normal_form(const MultiPoly& p,
                                                         const TrackedBasis& tb) {
    if (p.nvars() != tb.generators.front().nvars())
        throw DimensionMismatch("polynomial variable count differs from basis");
    Reduction red = reduce_full(p, to_tracked(tb), tb.order, tb.generators.size());
    return {std::move(red.remainder), std::move(red.consumed)};
}

bool is_groebner(const TrackedBasis& tb) {
    const std::vector<Tracked> basis = to_tracked(tb);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (coprime(basis[i].lm, basis[j].lm)) continue;
            Tracked s = s_polynomial(basis[i], basis[j], tb.order);
            if (s.p.is_zero()) continue;
            if (!reduce_full(s.p, basis, tb.order, tb.generators.size()).remainder.is_zero())
                return false;
        }
    }
    return true;
}

MembershipCertificate find_certificate(const std::vector<MultiPoly>& f, unsigned max_exponent,
                                       const MonomialOrder& order) {
    if (f.empty()) throw DimensionMismatch("empty generator list");
    const std::size_t nv = f.front().nvars();
    if (f.size() != nv)
        throw DimensionMismatch("certificate needs as many generators as variables");
    if (max_exponent < 1) throw DimensionMismatch("max_exponent must be >= 1");

    const TrackedBasis tb = buchberger(f, order);
    MembershipCertificate cert{std::vector<std::uint32_t>(nv, 0), PolyMatrix(nv, nv)};
    for (std::size_t i = 0; i < nv; ++i) {
        bool found = false;
        for (unsigned m = 1; m <= max_exponent && !found; ++m) {
            Monomial mono(nv);
            mono.exps[i] = m;
            auto [rem, cof] = normal_form(MultiPoly::term(nv, mono, 1), tb);
            if (rem.is_zero()) {
                cert.alpha[i] = m - 1;
                for (std::size_t j = 0; j < nv; ++j) cert.B.at(i, j) = std::move(cof[j]);
                found = true;
            }
        }
        if (!found)
            throw NotIsolatedOrCapTooLow(
                "no power of z" + std::to_string(i + 1) + " up to " +
                std::to_string(max_exponent) +
                " lies in the ideal: zero not isolated or cap too low");
    }
    if (!verify_certificate(cert, f))
        throw std::logic_error("certificate synthesis produced a non-verifying identity");
    return cert;
}

bool verify_certificate(const MembershipCertificate& cert, const std::vector<MultiPoly>& f) {
    const std::size_t n = f.size();
    if (cert.B.dim() != n || cert.alpha.size() != n) return false;
    const std::size_t nv = f.front().nvars();
    if (nv != n || cert.B.nvars() != nv) return false;
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly lhs(nv);
        for (std::size_t j = 0; j < n; ++j) lhs += cert.B.at(i, j) * f[j];
        Monomial target(nv);
        target.exps[i] = cert.alpha[i] + 1;
        if (lhs != MultiPoly::term(nv, target, 1)) return false;
    }
    return true;
}

MembershipCertificate paper_certificate_cpn(unsigned n) {
    if (n < 2) throw DimensionMismatch("paper certificate needs n >= 2");

    // Chart-0 components of the maximally degenerate field:
    //   X_j = z_{j+1} - z_1 z_j  (j = 1..n-1),  X_n = -z_1 z_n.
    const std::size_t nv = n;
    auto z = [&](std::size_t i) { return MultiPoly::variable(nv, i); };
    std::vector<MultiPoly> field;
    for (std::size_t j = 0; j + 1 < n; ++j) field.push_back(z(j + 1) - z(0) * z(j));
    field.push_back(-(z(0) * z(n - 1)));

    unsigned k = 0;
    while ((1u << (k + 1)) < n + 1) ++k;  // 2^k < n+1 <= 2^{k+1}
    const unsigned pow2k = 1u << k;

    auto z1_power = [&](unsigned long e) {
        Monomial m(nv);
        m.exps[0] = static_cast<std::uint32_t>(e);
        return MultiPoly::term(nv, m, 1);
    };

    MembershipCertificate cert{std::vector<std::uint32_t>(n, 0), PolyMatrix(n, nv)};

    // z_1^{n+1} = sum_m (-z_1^{n-m}) X_m.
    cert.alpha[0] = n;
    for (unsigned m = 1; m <= n; ++m) cert.B.at(0, m - 1) = -z1_power(n - m);

    // Middle rows: unrolling z_{j+1}^{2^k} = z_1^{2^k} z_j^{2^k} + X_j P_j
    // down to z_1^{(j+1) 2^k}, then through the z_1^{n+1} identity.
    // P_m = prod_{i=0}^{k-1} (z_{m+1}^{2^i} + z_1^{2^i} z_m^{2^i}).
    auto factored = [&](unsigned m) {
        MultiPoly p = MultiPoly::constant(nv, 1);
        for (unsigned i = 0; i < k; ++i) {
            const unsigned e = 1u << i;
            p = p * (z(m).pow(e) + z1_power(e) * z(m - 1).pow(e));
        }
        return p;
    };
    for (unsigned j = 1; j + 1 < n; ++j) {
        cert.alpha[j] = pow2k - 1;
        for (unsigned m = 1; m <= n; ++m) {
            MultiPoly entry = -z1_power(static_cast<unsigned long>(j + 1) * pow2k - m - 1);
            if (m <= j) entry += z1_power(static_cast<unsigned long>(j - m) * pow2k) * factored(m);
            cert.B.at(j, m - 1) = std::move(entry);
        }
    }

    // z_n^2 = z_n X_{n-1} - z_{n-1} X_n.
    cert.alpha[n - 1] = 1;
    cert.B.at(n - 1, n - 2) = z(n - 1);
    cert.B.at(n - 1, n - 1) = -z(n - 2);

    if (!verify_certificate(cert, field))
        throw std::logic_error("paper certificate failed exact verification");
    return cert;
}

}  // namespace resloc
