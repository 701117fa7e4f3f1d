#include "qk/order.hpp"

namespace qk {

namespace {

MonomialOrder make(MonomialOrder::Kind kind, int nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw StructuralError("order: variable count out of range");
    MonomialOrder o;
    o.kind = kind;
    o.nvars = static_cast<uint8_t>(nvars);
    for (int i = 0; i < kMaxVars; ++i) o.perm[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
    o.identity = true;
    return o;
}

// grevlex on the permuted positions [lo, hi)
int grevlex_range(const uint16_t* a, const uint16_t* b, const std::array<uint8_t, kMaxVars>& perm,
                  int lo, int hi) {
    uint32_t da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a[perm[static_cast<size_t>(i)]];
        db += b[perm[static_cast<size_t>(i)]];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i) {
        uint16_t ea = a[perm[static_cast<size_t>(i)]];
        uint16_t eb = b[perm[static_cast<size_t>(i)]];
        if (ea != eb) return ea < eb ? 1 : -1;
    }
    return 0;
}

int lex_range(const uint16_t* a, const uint16_t* b, const std::array<uint8_t, kMaxVars>& perm,
              int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
        uint16_t ea = a[perm[static_cast<size_t>(i)]];
        uint16_t eb = b[perm[static_cast<size_t>(i)]];
        if (ea != eb) return ea > eb ? 1 : -1;
    }
    return 0;
}

} // namespace

MonomialOrder MonomialOrder::grevlex(int nvars) { return make(Kind::grevlex, nvars); }

MonomialOrder MonomialOrder::lex(int nvars) { return make(Kind::lex, nvars); }

MonomialOrder MonomialOrder::elimination(int nvars, uint32_t drop_mask) {
    MonomialOrder o = make(Kind::block, nvars);
    int pos = 0;
    for (int i = 0; i < nvars; ++i)
        if (drop_mask & (1u << i)) o.perm[static_cast<size_t>(pos++)] = static_cast<uint8_t>(i);
    o.elim_block = static_cast<uint8_t>(pos);
    for (int i = 0; i < nvars; ++i)
        if (!(drop_mask & (1u << i))) o.perm[static_cast<size_t>(pos++)] = static_cast<uint8_t>(i);
    o.identity = true;
    for (int i = 0; i < nvars; ++i)
        if (o.perm[static_cast<size_t>(i)] != i) o.identity = false;
    return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars() || a.nvars() != nvars)
        throw StructuralError("order/monomial arity mismatch");
    const uint16_t* pa = a.data();
    const uint16_t* pb = b.data();
    switch (kind) {
        case Kind::grevlex:
            if (identity)
                return kern::active().cmp_grevlex(pa, pb, a.total_degree(), b.total_degree());
            return grevlex_range(pa, pb, perm, 0, nvars);
        case Kind::lex:
            if (identity) return kern::active().cmp_lex(pa, pb);
            return lex_range(pa, pb, perm, 0, nvars);
        case Kind::block: {
            int c = grevlex_range(pa, pb, perm, 0, elim_block);
            if (c != 0) return c;
            return grevlex_range(pa, pb, perm, elim_block, nvars);
        }
    }
    return 0; // unreachable
}

bool MonomialOrder::operator==(const MonomialOrder& o) const {
    if (kind != o.kind || nvars != o.nvars) return false;
    if (kind == Kind::block && elim_block != o.elim_block) return false;
    for (int i = 0; i < nvars; ++i)
        if (perm[static_cast<size_t>(i)] != o.perm[static_cast<size_t>(i)]) return false;
    return true;
}

} // namespace qk
