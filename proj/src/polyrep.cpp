#include "dahakit/polyrep.hpp"

namespace dahakit {

AffPoly divided_difference(const AffineWeylGroup& g, int i, const AffPoly& p)
{
    const AffPoly diff = p - act_on_poly(g, g.simple_reflection(i), p);
    return divide_by_linear(diff, affine_simple_root(g.datum(), i));
}

AffPoly PolynomialRep::divided_difference(int i, const AffPoly& p) const
{
    return dahakit::divided_difference(*group_, i, p);
}

AffPoly PolynomialRep::act_simple(int i, const AffPoly& p) const
{
    return act_on_poly(*group_, group_->simple_reflection(i), p) +
           AffPoly::u(p.rank()) * divided_difference(i, p);
}

AffPoly PolynomialRep::act_group(const ExtWeylElt& w, const AffPoly& p) const
{
    const CoxOmegaWord word = group_->reduced_word(w);
    AffPoly out = act_on_poly(*group_, group_->omega_elements()[word.omega], p);
    for (auto it = word.word.rbegin(); it != word.word.rend(); ++it) out = act_simple(*it, out);
    return out;
}

AffPoly PolynomialRep::act(const DahaElt& a, const AffPoly& p) const
{
    AffPoly out(p.rank());
    for (const auto& [w, q] : a.terms) out += act_group(w, q * p);
    return out;
}

}  // namespace dahakit
