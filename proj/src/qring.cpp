#include "qk/qring.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace qk {

// ---------------------------------------------------------------------------
// QuotientRing

struct QuotientRing::Caches {
    std::mutex mutex;
    std::optional<std::vector<MonomialPrime>> ass;
    std::optional<std::vector<MonomialPrime>> min;
};

QuotientRing::QuotientRing(PolyRing ring, std::vector<Polynomial> defining_gens)
    : defining_(std::move(ring), std::move(defining_gens)),
      caches_(std::make_shared<Caches>()) {
    init();
}

QuotientRing::QuotientRing(PolyRing ring, std::vector<Polynomial> defining_gens,
                           SuppliedDecomposition dec)
    : defining_(std::move(ring), std::move(defining_gens)),
      caches_(std::make_shared<Caches>()) {
    init();

    if (dec.components.empty())
        throw StructuralError("supplied decomposition has no components");
    std::optional<PolyIdeal> meet;
    for (const auto& comp : dec.components) {
        if (!(comp.primary.ring() == defining_.ring()) ||
            !(comp.prime.ring() == defining_.ring()))
            throw StructuralError("supplied decomposition: wrong ambient ring");
        if (!ideal_contains(comp.primary, defining_))
            throw StructuralError("supplied decomposition: component does not contain I");
        if (!ideal_contains(comp.prime, comp.primary))
            throw StructuralError(
                "supplied decomposition: claimed radical does not contain its component");
        // each claimed radical generator must be nilpotent on the component
        for (const Polynomial& g : comp.prime.gens()) {
            if (g.is_zero()) continue;
            if (!is_unit_ideal(saturation(comp.primary, g)))
                throw StructuralError(
                    "supplied decomposition: radical generator not in the radical of its "
                    "component");
        }
        meet = meet ? intersect(*meet, comp.primary) : comp.primary;
    }
    if (!ideal_equal(*meet, defining_))
        throw StructuralError("supplied decomposition: components do not intersect to I");
    supplied_ = std::make_shared<const SuppliedDecomposition>(std::move(dec));
}

void QuotientRing::init() {
    if (is_unit_ideal(defining_))
        throw StructuralError("unit defining ideal: the quotient is the zero ring");
    monomial_form_ = monomial_form(defining_);
}

const MonomialIdeal& QuotientRing::monomial_ideal() const {
    if (!monomial_form_)
        throw CapabilityError("operation requires a monomial defining ideal");
    return *monomial_form_;
}

const SuppliedDecomposition& QuotientRing::decomposition() const {
    if (!supplied_) throw CapabilityError("no supplied primary decomposition attached");
    return *supplied_;
}

bool QuotientRing::is_domain_hint() const {
    if (is_zero_ideal(defining_)) return true;
    if (!monomial_form_) return false;
    const MonomialIdeal& m = *monomial_form_;
    return !m.gens().empty() && std::all_of(m.gens().begin(), m.gens().end(), [](const Monomial& g) {
        return g.total_degree() == 1;
    });
}

const std::vector<MonomialPrime>& QuotientRing::monomial_ass() const {
    std::lock_guard<std::mutex> lock(caches_->mutex);
    if (!caches_->ass) caches_->ass = ass_monomial(monomial_ideal());
    return *caches_->ass;
}

const std::vector<MonomialPrime>& QuotientRing::monomial_min() const {
    std::lock_guard<std::mutex> lock(caches_->mutex);
    if (!caches_->min) caches_->min = min_primes_monomial(monomial_ideal());
    return *caches_->min;
}

std::string QuotientRing::describe() const {
    std::string s = "GF(" + std::to_string(ring().modulus) + ")[";
    for (int i = 0; i < ring().nvars(); ++i) {
        if (i) s += ",";
        s += ring().var_name(i);
    }
    s += "]/(";
    bool first = true;
    for (const Polynomial& g : defining_.gens()) {
        if (!first) s += ", ";
        s += to_string(g, ring());
        first = false;
    }
    if (first) s += "0";
    s += ")";
    return s;
}

// ---------------------------------------------------------------------------
// RIdeal

RIdeal::RIdeal(QuotientRing ring, PolyIdeal preimage, int) // pre-validated
    : ring_(std::move(ring)), preimage_(std::move(preimage)) {}

RIdeal::RIdeal(QuotientRing ring, std::vector<Polynomial> coset_gens)
    : ring_(std::move(ring)),
      preimage_([&] {
          std::vector<Polynomial> gens(ring_.defining_ideal().gens().begin(),
                                       ring_.defining_ideal().gens().end());
          gens.insert(gens.end(), coset_gens.begin(), coset_gens.end());
          return PolyIdeal(ring_.ring(), std::move(gens));
      }()) {}

RIdeal RIdeal::from_preimage(QuotientRing ring, PolyIdeal preimage) {
    if (!(preimage.ring() == ring.ring()))
        throw StructuralError("RIdeal preimage lives in a different ambient ring");
    if (!ideal_contains(preimage, ring.defining_ideal()))
        throw StructuralError("RIdeal preimage does not contain the defining ideal");
    return RIdeal(std::move(ring), std::move(preimage), 0);
}

RIdeal RIdeal::zero_ideal(QuotientRing ring) { return RIdeal(std::move(ring), {}); }

RIdeal RIdeal::unit_ideal(QuotientRing ring) {
    Polynomial one = Polynomial::constant(ring.ring(), ring.ring().element(1));
    return RIdeal(std::move(ring), {one});
}

std::vector<Polynomial> RIdeal::coset_generators() const {
    std::vector<Polynomial> out;
    for (const Polynomial& g : preimage_.gens()) {
        Polynomial n = normal_form(g, ring_.defining_ideal());
        if (n.is_zero()) continue;
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return to_string(a, ring_.ring()) < to_string(b, ring_.ring());
    });
    return out;
}

bool RIdeal::is_zero() const { return ideal_equal(preimage_, ring_.defining_ideal()); }

bool RIdeal::is_unit() const { return is_unit_ideal(preimage_); }

std::optional<MonomialIdeal> RIdeal::monomial_preimage() const { return monomial_form(preimage_); }

bool rideal_equal(const RIdeal& a, const RIdeal& b) {
    if (!(a.ring() == b.ring())) throw StructuralError("rideal_equal: different rings");
    return ideal_equal(a.preimage(), b.preimage());
}

RIdeal rideal_sum(const RIdeal& a, const RIdeal& b) {
    if (!(a.ring() == b.ring())) throw StructuralError("rideal_sum: different rings");
    std::vector<Polynomial> gens(a.preimage().gens().begin(), a.preimage().gens().end());
    gens.insert(gens.end(), b.preimage().gens().begin(), b.preimage().gens().end());
    return RIdeal::from_preimage(a.ring(), PolyIdeal(a.ring().ring(), std::move(gens)));
}

RIdeal rideal_product(const RIdeal& a, const RIdeal& b) {
    if (!(a.ring() == b.ring())) throw StructuralError("rideal_product: different rings");
    MonomialOrder ord = a.ring().order();
    std::vector<Polynomial> gens;
    for (const Polynomial& f : a.coset_generators())
        for (const Polynomial& g : b.coset_generators()) gens.push_back(poly_mul(f, g, ord));
    return RIdeal(a.ring(), std::move(gens));
}

bool rideal_member(const Polynomial& f, const RIdeal& a) {
    return ideal_member(f, a.preimage());
}

// ---------------------------------------------------------------------------
// PrimeRep

PolyIdeal PrimeRep::as_poly_ideal(const PolyRing& ring) const {
    if (is_monomial()) return to_poly_ideal(mono(), ring);
    return poly();
}

RIdeal PrimeRep::as_rideal(const QuotientRing& R) const {
    return RIdeal::from_preimage(R, as_poly_ideal(R.ring()));
}

std::string PrimeRep::key(const PolyRing& ring) const {
    if (is_monomial()) {
        if (mono().mask == 0) return "(0)";
        std::string s;
        for (int i = 0; i < mono().nvars; ++i) {
            if (!(mono().mask & (1u << i))) continue;
            if (!s.empty()) s += ",";
            s += ring.var_name(i);
        }
        return s;
    }
    std::string s = "(";
    bool first = true;
    for (const Polynomial& g : *poly().basis()) {
        if (!first) s += ", ";
        s += to_string(g, ring);
        first = false;
    }
    return s + ")";
}

bool prime_rep_equal(const PrimeRep& a, const PrimeRep& b, const PolyRing& ring) {
    if (a.is_monomial() && b.is_monomial()) return a.mono() == b.mono();
    return ideal_equal(a.as_poly_ideal(ring), b.as_poly_ideal(ring));
}

bool prime_rep_contains(const PrimeRep& p, const PrimeRep& q, const PolyRing& ring) {
    if (p.is_monomial() && q.is_monomial()) return p.mono().contains(q.mono());
    return ideal_contains(p.as_poly_ideal(ring), q.as_poly_ideal(ring));
}

namespace {

// canonical report order: monomial primes first (by size then index-lex),
// then supplied primes by display key
bool prime_rep_less(const PrimeRep& a, const PrimeRep& b, const PolyRing& ring) {
    if (a.is_monomial() != b.is_monomial()) return a.is_monomial();
    if (a.is_monomial()) return prime_less(a.mono(), b.mono());
    return a.key(ring) < b.key(ring);
}

// membership of an ambient polynomial in a monomial prime is syntactic:
// every term must involve a variable of the prime
bool poly_in_monomial_prime(const Polynomial& f, const MonomialPrime& p) {
    for (const auto& t : f.terms())
        if ((t.mono.support() & p.mask) == 0) return false;
    return true;
}

bool rideal_inside_monomial_prime(const RIdeal& A, const MonomialPrime& p) {
    for (const Polynomial& g : A.preimage().gens())
        if (!poly_in_monomial_prime(g, p)) return false;
    return true;
}

} // namespace

// ---------------------------------------------------------------------------
// annihilator / density

RIdeal annihilator(const QuotientRing& R, const RIdeal& A) {
    // monomial fast path: intersect combinatorial colons
    if (R.is_monomial()) {
        if (auto apre = A.monomial_preimage()) {
            const MonomialIdeal& I = R.monomial_ideal();
            MonomialIdeal acc = MonomialIdeal::unit(I.nvars()); // (0 : (0)) = R
            for (const Monomial& g : apre->gens()) acc = mi_intersect(acc, mi_colon(I, g));
            return RIdeal::from_preimage(R, to_poly_ideal(acc, R.ring()));
        }
    }
    const PolyIdeal& I = R.defining_ideal();
    PolyIdeal ann = colon_ideal(I, A.preimage());
    return RIdeal::from_preimage(R, std::move(ann));
}

bool is_dense(const QuotientRing& R, const RIdeal& A) {
    if (R.is_monomial()) {
        // dense iff A avoids every associated prime
        for (const MonomialPrime& p : R.monomial_ass())
            if (rideal_inside_monomial_prime(A, p)) return false;
        return true;
    }
    return annihilator(R, A).is_zero();
}

bool is_semiregular(const QuotientRing& R, const RIdeal& A) { return is_dense(R, A); }

// ---------------------------------------------------------------------------
// associated primes / q-Max

std::vector<PrimeRep> associated_primes(const QuotientRing& R) {
    std::vector<PrimeRep> out;
    if (R.is_monomial()) {
        for (const MonomialPrime& p : R.monomial_ass()) out.push_back(PrimeRep::monomial(p));
        return out;
    }
    if (R.has_decomposition()) {
        for (const auto& comp : R.decomposition().components) {
            PrimeRep p = PrimeRep::supplied(comp.prime);
            bool dup = std::any_of(out.begin(), out.end(), [&](const PrimeRep& q) {
                return prime_rep_equal(p, q, R.ring());
            });
            if (!dup) out.push_back(std::move(p));
        }
        std::sort(out.begin(), out.end(), [&](const PrimeRep& a, const PrimeRep& b) {
            return prime_rep_less(a, b, R.ring());
        });
        return out;
    }
    throw CapabilityError(
        "associated primes need a monomial defining ideal or a supplied primary decomposition");
}

std::vector<PrimeRep> q_max(const QuotientRing& R) {
    std::vector<PrimeRep> ass = associated_primes(R);
    std::vector<PrimeRep> out;
    for (const PrimeRep& p : ass) {
        bool maximal = std::none_of(ass.begin(), ass.end(), [&](const PrimeRep& q) {
            return !prime_rep_equal(p, q, R.ring()) && prime_rep_contains(q, p, R.ring());
        });
        if (maximal) out.push_back(p);
    }
    if (out.empty()) throw InvariantViolation("q-Max empty: Ass(R) of a nonzero ring is nonempty");
    return out;
}

// ---------------------------------------------------------------------------
// heights and dimensions

namespace {

int ambient_quotient_dim(const PrimeRep& p) {
    if (p.is_monomial()) return p.mono().nvars - p.mono().size();
    return krull_dim(p.poly()).dim;
}

std::vector<PrimeRep> minimal_primes(const QuotientRing& R) {
    if (R.is_monomial()) {
        std::vector<PrimeRep> out;
        for (const MonomialPrime& p : R.monomial_min()) out.push_back(PrimeRep::monomial(p));
        return out;
    }
    // Noetherian: Min(R) = inclusion-minimal associated primes
    std::vector<PrimeRep> ass = associated_primes(R);
    std::vector<PrimeRep> out;
    for (const PrimeRep& p : ass) {
        bool minimal = std::none_of(ass.begin(), ass.end(), [&](const PrimeRep& q) {
            return !prime_rep_equal(p, q, R.ring()) && prime_rep_contains(p, q, R.ring());
        });
        if (minimal) out.push_back(p);
    }
    return out;
}

} // namespace

int height(const QuotientRing& R, const PrimeRep& p) {
    PolyIdeal p_poly = p.as_poly_ideal(R.ring());
    if (!ideal_contains(p_poly, R.defining_ideal()))
        throw StructuralError("height: the prime does not contain the defining ideal");

    int dim_p = ambient_quotient_dim(p);
    int best = -1;
    for (const PrimeRep& q : minimal_primes(R)) {
        if (!prime_rep_contains(p, q, R.ring())) continue;
        best = std::max(best, ambient_quotient_dim(q) - dim_p);
    }
    if (best < 0)
        throw InvariantViolation("height: no minimal prime below a prime containing I");
    return best;
}

int q_dim(const QuotientRing& R) {
    int best = 0;
    for (const PrimeRep& m : q_max(R)) best = std::max(best, height(R, m));
    return best;
}

int q_dim_chain_oracle(const QuotientRing& R) {
    if (!R.is_monomial())
        throw CapabilityError("the chain oracle runs on monomial defining ideals only");
    const MonomialIdeal& I = R.monomial_ideal();
    int n = I.nvars();

    std::vector<uint32_t> supports;
    for (const Monomial& g : I.gens()) supports.push_back(g.support());

    // the poset of monomial primes containing I: variable sets hitting
    // every generator support
    std::vector<char> in_poset(size_t(1) << n, 0);
    for (uint32_t v = 0; v < (1u << n); ++v) {
        bool hits = std::all_of(supports.begin(), supports.end(),
                                [&](uint32_t s) { return (s & v) != 0; });
        in_poset[v] = hits ? 1 : 0;
    }

    const std::vector<MonomialPrime>& ass = R.monomial_ass();
    auto non_semiregular = [&](uint32_t v) {
        return std::any_of(ass.begin(), ass.end(),
                           [&](const MonomialPrime& a) { return (v & ~a.mask) == 0; });
    };

    // longest descending chain inside the poset; every maximal chain ends
    // at a poset-minimal element, which is exactly a minimal prime of I
    std::vector<int> chain(size_t(1) << n, 0);
    for (uint32_t v = 0; v < (1u << n); ++v) {
        if (!in_poset[v]) continue;
        int best = 0;
        if (v != 0) {
            for (uint32_t w = (v - 1) & v;; w = (w - 1) & v) {
                if (in_poset[w]) best = std::max(best, chain[w] + 1);
                if (w == 0) break;
            }
        }
        chain[v] = best;
    }

    // maximal non-semiregular primes in the poset (= q-Max, rederived)
    int answer = 0;
    for (uint32_t v = 0; v < (1u << n); ++v) {
        if (!in_poset[v] || !non_semiregular(v)) continue;
        bool maximal = true;
        for (uint32_t w = 0; w < (1u << n) && maximal; ++w) {
            if (w == v || !in_poset[w] || !non_semiregular(w)) continue;
            if ((v & ~w) == 0) maximal = false; // v strictly inside w
        }
        if (maximal) answer = std::max(answer, chain[v]);
    }
    return answer;
}

// ---------------------------------------------------------------------------
// nilradical and reducedness

bool is_nilpotent(const QuotientRing& R, const Polynomial& f) {
    Polynomial nf = normal_form(f, R.defining_ideal());
    if (nf.is_zero()) return true;
    return is_unit_ideal(saturation(R.defining_ideal(), nf));
}

namespace {
PolyIdeal supplied_radical(const QuotientRing& R) {
    std::optional<PolyIdeal> rad;
    for (const auto& comp : R.decomposition().components)
        rad = rad ? intersect(*rad, comp.prime) : comp.prime;
    return *rad;
}
} // namespace

bool is_reduced(const QuotientRing& R) {
    if (R.is_monomial()) return radical_monomial(R.monomial_ideal()) == R.monomial_ideal();
    if (R.has_decomposition())
        return ideal_contains(R.defining_ideal(), supplied_radical(R));
    throw CapabilityError(
        "reducedness needs a monomial defining ideal or a supplied primary decomposition");
}

RIdeal nilradical(const QuotientRing& R) {
    if (R.is_monomial()) {
        MonomialIdeal rad = radical_monomial(R.monomial_ideal());
        return RIdeal::from_preimage(R, to_poly_ideal(rad, R.ring()));
    }
    if (R.has_decomposition()) return RIdeal::from_preimage(R, supplied_radical(R));
    throw CapabilityError(
        "nilradical generators need a monomial defining ideal or a supplied decomposition");
}

QuotientRing quotient_by_nil(const QuotientRing& R) {
    if (!R.is_monomial())
        throw CapabilityError("quotient by the nilradical runs on monomial defining ideals only");
    MonomialIdeal rad = radical_monomial(R.monomial_ideal());
    std::vector<Polynomial> gens;
    for (const Monomial& g : rad.gens()) gens.push_back(Polynomial::from_monomial(R.ring(), g));
    return QuotientRing(R.ring(), std::move(gens));
}

bool is_tau_q_vnr(const QuotientRing& R) { return is_reduced(R) && q_dim(R) == 0; }

// ---------------------------------------------------------------------------
// q-closure

bool q_closure_member(const QuotientRing& R, const RIdeal& A, const Polynomial& r) {
    if (rideal_member(r, A)) return true; // covers r = 0 as well

    PolyIdeal quotient = [&]() -> PolyIdeal {
        if (R.is_monomial() && r.is_monomial_times_unit()) {
            if (auto apre = A.monomial_preimage())
                return to_poly_ideal(mi_colon(*apre, r.leading_term().mono), R.ring());
        }
        return colon(A.preimage(), r);
    }();
    return is_semiregular(R, RIdeal::from_preimage(R, std::move(quotient)));
}

RIdeal q_closure(const QuotientRing& R, const RIdeal& A) {
    if (A.is_unit()) return RIdeal::unit_ideal(R);
    auto apre = A.monomial_preimage();
    if (!R.is_monomial() || !apre)
        throw CapabilityError(
            "q-closure as an ideal needs the monomial path or a supplied decomposition of A; "
            "q_closure_member stays available per element");

    uint32_t all = R.ring().nvars() == 0 ? 0 : ((1u << R.ring().nvars()) - 1);
    std::optional<MonomialIdeal> acc;
    for (const PrimeRep& m : q_max(R)) {
        // contraction of A R_m: saturate away the variables outside m
        MonomialIdeal contracted = saturate_by_vars(*apre, all & ~m.mono().mask);
        acc = acc ? mi_intersect(*acc, contracted) : contracted;
    }
    return RIdeal::from_preimage(R, to_poly_ideal(*acc, R.ring()));
}

RIdeal q_closure(const QuotientRing& R, const RIdeal& A, const SuppliedDecomposition& dec) {
    // verify the decomposition describes A's preimage
    std::optional<PolyIdeal> meet;
    for (const auto& comp : dec.components) {
        if (!ideal_contains(comp.primary, A.preimage()))
            throw StructuralError("q_closure: decomposition component does not contain A");
        meet = meet ? intersect(*meet, comp.primary) : comp.primary;
    }
    if (!meet || !ideal_equal(*meet, A.preimage()))
        throw StructuralError("q_closure: decomposition does not intersect to A");

    std::optional<PolyIdeal> acc;
    for (const PrimeRep& m : q_max(R)) {
        PolyIdeal m_poly = m.as_poly_ideal(R.ring());
        // components whose radical sits inside m survive localization at m
        std::optional<PolyIdeal> local;
        for (const auto& comp : dec.components) {
            if (!ideal_contains(m_poly, comp.prime)) continue;
            local = local ? intersect(*local, comp.primary) : comp.primary;
        }
        if (!local) continue; // A R_m = R_m: no constraint
        acc = acc ? intersect(*acc, *local) : *local;
    }
    if (!acc) return RIdeal::unit_ideal(R);
    return RIdeal::from_preimage(R, std::move(*acc));
}

bool is_q_ideal(const QuotientRing& R, const RIdeal& A) {
    return rideal_equal(q_closure(R, A), A);
}

bool is_q_ideal(const QuotientRing& R, const PrimeRep& p) {
    return !is_semiregular(R, p.as_rideal(R));
}

// ---------------------------------------------------------------------------
// polynomial extension

QuotientRing extend_poly(const QuotientRing& R) {
    if (R.ring().nvars() >= kMaxVars)
        throw StructuralError("extend_poly: variable cap reached");
    PolyRing big = R.ring().appended(R.ring().fresh_var_name());
    MonomialOrder ord = MonomialOrder::grevlex(big.nvars());

    auto widen_ideal = [&](const PolyIdeal& ideal) {
        std::vector<Polynomial> ws;
        for (const Polynomial& g : ideal.gens()) {
            std::vector<Term> terms;
            for (const auto& t : g.terms()) terms.push_back({t.mono.widened(big.nvars()), t.coeff});
            ws.push_back(Polynomial::from_terms(std::move(terms), ord));
        }
        return PolyIdeal(big, std::move(ws));
    };

    PolyIdeal widened_defining = widen_ideal(R.defining_ideal());
    std::vector<Polynomial> gens(widened_defining.gens().begin(), widened_defining.gens().end());

    std::optional<QuotientRing> ext;
    if (R.has_decomposition()) {
        // primary components extend to primary components of the extension
        SuppliedDecomposition dec;
        for (const auto& comp : R.decomposition().components)
            dec.components.push_back({widen_ideal(comp.primary), widen_ideal(comp.prime)});
        ext.emplace(big, std::move(gens), std::move(dec));
    } else {
        ext.emplace(big, std::move(gens));
    }

    if (R.is_monomial()) {
        // Ass of the extension must be exactly the extensions of Ass(R)
        const auto& base = R.monomial_ass();
        const auto& lifted = ext->monomial_ass();
        bool ok = base.size() == lifted.size();
        for (size_t i = 0; ok && i < base.size(); ++i) ok = lifted[i].mask == base[i].mask;
        if (!ok)
            throw InvariantViolation(
                "extend_poly: associated primes of the extension are not the extended ones");
    }
    return std::move(*ext);
}

// ---------------------------------------------------------------------------
// contents and the Dedekind-Mertens machinery

int ExtPoly::degree(const QuotientRing& R) const {
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        if (!normal_form(coeffs[static_cast<size_t>(i)], R.defining_ideal()).is_zero()) return i;
    }
    return -1;
}

RIdeal content(const QuotientRing& R, const ExtPoly& f) {
    if (static_cast<int>(f.coeffs.size()) > kExtDegreeCap + 1)
        throw StructuralError("content: degree cap exceeded");
    return RIdeal(R, f.coeffs);
}

ExtPoly ext_mul(const QuotientRing& R, const ExtPoly& g, const ExtPoly& f) {
    MonomialOrder ord = R.order();
    if (g.coeffs.empty() || f.coeffs.empty()) return {};
    ExtPoly out;
    out.coeffs.assign(g.coeffs.size() + f.coeffs.size() - 1, Polynomial());
    for (size_t i = 0; i < g.coeffs.size(); ++i)
        for (size_t j = 0; j < f.coeffs.size(); ++j)
            out.coeffs[i + j] =
                poly_add(out.coeffs[i + j], poly_mul(g.coeffs[i], f.coeffs[j], ord), ord);
    return out;
}

int dm_check(const QuotientRing& R, const ExtPoly& g, const ExtPoly& f) {
    RIdeal cg = content(R, g);
    RIdeal cf = content(R, f);
    RIdeal cgf = content(R, ext_mul(R, g, f));

    int bound = std::max(0, f.degree(R));
    RIdeal lhs = rideal_product(cg, cf); // c(g)^{k+1} c(f) at k = 0
    RIdeal rhs = cgf;                    // c(g)^k c(gf) at k = 0
    for (int k = 0; k <= bound; ++k) {
        if (rideal_equal(lhs, rhs)) return k;
        lhs = rideal_product(lhs, cg);
        rhs = rideal_product(rhs, cg);
    }
    throw InvariantViolation("Dedekind-Mertens failed up to deg f on " + R.describe() +
                             ": the identity must hold at k = deg f");
}

LemmaResult content_q_lemma_check(const QuotientRing& R, const ExtPoly& g, const ExtPoly& f) {
    if (!is_semiregular(R, content(R, g)))
        return {LemmaStatus::skipped, "c(g) is not semiregular"};

    RIdeal cf = content(R, f);
    RIdeal cgf = content(R, ext_mul(R, g, f));
    for (const Polynomial& a : cgf.coset_generators())
        if (!q_closure_member(R, cf, a))
            return {LemmaStatus::failed, "generator of c(gf) outside the closure of c(f)"};
    for (const Polynomial& b : cf.coset_generators())
        if (!q_closure_member(R, cgf, b))
            return {LemmaStatus::failed, "generator of c(f) outside the closure of c(gf)"};
    return {LemmaStatus::passed, ""};
}

// ---------------------------------------------------------------------------
// full analysis

QAnalysis analyze(const QuotientRing& R) {
    QAnalysis a;
    a.ass = associated_primes(R);
    a.min_primes = minimal_primes(R);
    a.q_max = q_max(R);
    for (const PrimeRep& p : a.ass) a.heights.push_back(height(R, p));
    a.dim = krull_dim(R.defining_ideal()).dim;

    a.q_dim = 0;
    for (size_t i = 0; i < a.ass.size(); ++i) a.q_dim = std::max(a.q_dim, a.heights[i]);
    if (a.q_dim > a.dim) throw InvariantViolation("q-dim exceeds dim");
    // the sup over all associated primes must be attained on q-Max
    int over_max = 0;
    for (const PrimeRep& m : a.q_max) over_max = std::max(over_max, height(R, m));
    if (over_max != a.q_dim)
        throw InvariantViolation("q-dim: sup over Ass not attained on q-Max");

    a.reduced = is_reduced(R);
    a.tau_q_vnr = a.reduced && a.q_dim == 0;
    a.tainted = std::any_of(a.ass.begin(), a.ass.end(),
                            [](const PrimeRep& p) { return p.tainted(); });
    a.min_count = static_cast<int>(a.min_primes.size());
    return a;
}

} // namespace qk
