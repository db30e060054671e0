#include "steenrod/exact.hpp"

#include "steenrod/errors.hpp"

#include <algorithm>

namespace steenrod {

bool SesCertificate::ok() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const DegreeCheck& d) { return d.ok(); });
}

SesCertificate certify_ses(const ShortExactSequence& ses) {
    const auto& a = ses.i.source();
    const auto& b = ses.i.target();
    const auto& c = ses.p.target();
    if (!(ses.p.source() == b)) throw ValidationError("short sequence maps do not compose");
    int lo = 0, hi = -1;
    bool any = false;
    for (const auto* x : {&a, &b, &c}) {
        if (x->is_zero()) continue;
        lo = any ? std::min(lo, x->lo()) : x->lo();
        hi = any ? std::max(hi, x->hi()) : x->hi();
        any = true;
    }
    SesCertificate cert;
    for (int n = lo; n <= hi; ++n) {
        const auto in = ses.i.component(n);
        const auto pn = ses.p.component(n);
        DegreeCheck d;
        d.degree = n;
        d.mono = rank(in) == in.cols();
        d.epi = lattices_equal(pn, IntMatrix::identity(pn.rows()));
        d.composite = (pn * in).is_zero();
        d.exact = lattices_equal(kernel_basis(pn), in);
        cert.degrees.push_back(d);
    }
    return cert;
}

namespace {

Homomorphism connecting_map(const ShortExactSequence& ses, int n, const HomologyData& hc, const HomologyData& ha) {
    const auto& b = ses.i.target();
    const auto pn = ses.p.component(n);
    const auto im1 = ses.i.component(n - 1);
    const auto db = b.differential(n);
    IntMatrix m(ha.cycles.cols(), hc.cycles.cols());
    if (hc.cycles.cols() == 0) return {hc.group, ha.group, std::move(m)};
    const Solver lift_p(pn), pull_i(im1);
    for (std::size_t j = 0; j < hc.cycles.cols(); ++j) {
        auto lift = lift_p(hc.cycles.col(j));
        if (!lift) throw ValidationError("connecting map: p is not surjective");
        auto boundary = db.apply(*lift);
        auto pulled = pull_i(boundary);
        if (!pulled) throw ValidationError("connecting map: boundary of the lift is not in the image of i");
        m.set_col(j, ha.coordinates.apply(*pulled));
    }
    return {hc.group, ha.group, std::move(m)};
}

}  // namespace

Homomorphism connecting_map(const ShortExactSequence& ses, int n) {
    return connecting_map(ses, n, homology_data(ses.p.target(), n), homology_data(ses.i.source(), n - 1));
}

bool LongExactSequence::composites_vanish() const {
    for (std::size_t k = 0; k + 1 < maps.size(); ++k)
        if (!compose(maps[k + 1], maps[k]).is_zero()) return false;
    return true;
}

std::vector<std::size_t> LongExactSequence::failures() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k + 1 < maps.size(); ++k)
        if (!is_exact_at(maps[k], maps[k + 1])) out.push_back(k + 1);
    return out;
}

bool LongExactSequence::exact() const { return failures().empty(); }

LongExactSequence homology_sequence(const ShortExactSequence& ses, int lo, int hi,
                                    const std::vector<std::string>& names) {
    const auto& a = ses.i.source();
    const auto& b = ses.i.target();
    const auto& c = ses.p.target();
    LongExactSequence les;
    HomologyData hc_prev;
    for (int n = hi; n >= lo; --n) {
        auto ha = homology_data(a, n);
        auto hb = homology_data(b, n);
        auto hc = homology_data(c, n);
        // connecting map from H_{n+1}(C), whose data sits at the back of the sequence
        if (n < hi) les.maps.push_back(connecting_map(ses, n + 1, hc_prev, ha));
        les.groups.push_back(ha.group);
        les.labels.push_back("H_" + std::to_string(n) + "(" + names[0] + ")");
        les.maps.push_back(induced_on_homology(ses.i, n, ha, hb));
        les.groups.push_back(hb.group);
        les.labels.push_back("H_" + std::to_string(n) + "(" + names[1] + ")");
        les.maps.push_back(induced_on_homology(ses.p, n, hb, hc));
        les.groups.push_back(hc.group);
        les.labels.push_back("H_" + std::to_string(n) + "(" + names[2] + ")");
        hc_prev = std::move(hc);
    }
    return les;
}

bool ladder_commutes_on_chains(const SesMorphism& m) {
    return compose(m.b, m.source.i) == compose(m.target.i, m.a) && compose(m.c, m.source.p) == compose(m.target.p, m.b);
}

std::vector<LadderCheck> check_ladder(const SesMorphism& m, int lo, int hi) {
    std::vector<LadderCheck> out;
    // H_{n-1} of the left-hand terms is H_n of the previous step
    auto la = homology_data(m.source.i.source(), lo - 1), la2 = homology_data(m.target.i.source(), lo - 1);
    for (int n = lo; n <= hi; ++n) {
        LadderCheck l;
        l.degree = n;
        auto ha = homology_data(m.source.i.source(), n), ha2 = homology_data(m.target.i.source(), n);
        auto hb = homology_data(m.source.i.target(), n), hb2 = homology_data(m.target.i.target(), n);
        auto hc = homology_data(m.source.p.target(), n), hc2 = homology_data(m.target.p.target(), n);
        auto a = induced_on_homology(m.a, n, ha, ha2);
        auto b = induced_on_homology(m.b, n, hb, hb2);
        auto c = induced_on_homology(m.c, n, hc, hc2);
        l.left = equal_maps(compose(b, induced_on_homology(m.source.i, n, ha, hb)),
                            compose(induced_on_homology(m.target.i, n, ha2, hb2), a));
        l.middle = equal_maps(compose(c, induced_on_homology(m.source.p, n, hb, hc)),
                              compose(induced_on_homology(m.target.p, n, hb2, hc2), b));
        auto a_low = induced_on_homology(m.a, n - 1, la, la2);
        l.connecting = equal_maps(compose(a_low, connecting_map(m.source, n, hc, la)),
                                  compose(connecting_map(m.target, n, hc2, la2), c));
        out.push_back(l);
        la = std::move(ha);
        la2 = std::move(ha2);
    }
    return out;
}

ShortExactSequence cone_sequence(const ChainMap& f) {
    auto cone = mapping_cone(f);
    const auto& l = f.source();
    const auto& m = f.target();
    const auto& c = cone.complex;
    auto sl = suspension(l);
    std::vector<IntMatrix> iota, pi;
    for (int n = m.lo(); n <= m.hi(); ++n) {
        IntMatrix x(c.rank(n), m.rank(n));
        const long s = (n % 2 == 0) ? 1 : -1;
        for (std::size_t k = 0; k < m.rank(n); ++k) x(l.rank(n - 1) + k, k) = s;
        iota.push_back(std::move(x));
    }
    for (int n = c.lo(); n <= c.hi(); ++n) {
        IntMatrix x(sl.rank(n), c.rank(n));
        for (std::size_t k = 0; k < l.rank(n - 1); ++k) x(k, k) = 1;
        pi.push_back(std::move(x));
    }
    return {ChainMap(m, c, std::move(iota)), ChainMap(c, sl, std::move(pi))};
}

}  // namespace steenrod
