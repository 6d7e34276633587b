#include "dahakit/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dahakit {

std::string to_string(Flavor f)
{
    return f == Flavor::simply_connected ? "simply-connected" : "adjoint";
}

// -- vector types -----------------------------------------------------------

namespace {

template <typename V>
void add_into(V& a, const V& b, int sign)
{
    if (a.coords.size() != b.coords.size())
        throw std::invalid_argument("vectors from different root data");
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (sign > 0) a.coords[i] += b.coords[i];
        else a.coords[i] -= b.coords[i];
    }
}

}  // namespace

FinWeight& FinWeight::operator+=(const FinWeight& o) { add_into(*this, o, 1); return *this; }
FinWeight& FinWeight::operator-=(const FinWeight& o) { add_into(*this, o, -1); return *this; }
FinWeight operator*(const Rational& c, FinWeight a)
{
    for (auto& x : a.coords) x *= c;
    return a;
}
FinWeight operator-(FinWeight a)
{
    for (auto& x : a.coords) x = -x;
    return a;
}
bool FinWeight::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return x == 0; });
}

FinCoweight& FinCoweight::operator+=(const FinCoweight& o) { add_into(*this, o, 1); return *this; }
FinCoweight& FinCoweight::operator-=(const FinCoweight& o) { add_into(*this, o, -1); return *this; }
FinCoweight operator*(const Rational& c, FinCoweight a)
{
    for (auto& x : a.coords) x *= c;
    return a;
}
FinCoweight operator-(FinCoweight a)
{
    for (auto& x : a.coords) x = -x;
    return a;
}
bool FinCoweight::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return x == 0; });
}

// -- Cartan data ------------------------------------------------------------

namespace {

void validate(char type, int rank)
{
    bool ok = false;
    switch (type) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
    }
    if (!ok)
        throw std::invalid_argument("no irreducible root system of type " + std::string(1, type) +
                                    std::to_string(rank));
}

}  // namespace

IntMatrix symmetric_form(char type, int rank)
{
    validate(type, rank);
    const int n = rank;
    IntMatrix b(n, IntVector(n, 0));
    auto link = [&](int i, int j, long v) { b[i][j] = b[j][i] = v; };
    switch (type) {
    case 'A':
        for (int i = 0; i < n; ++i) b[i][i] = 2;
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
    case 'B':
        // alpha_n short
        for (int i = 0; i < n; ++i) b[i][i] = i + 1 < n ? 4 : 2;
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
        break;
    case 'C':
        // alpha_n long
        for (int i = 0; i < n; ++i) b[i][i] = i + 1 < n ? 2 : 4;
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
        link(n - 2, n - 1, -2);
        break;
    case 'D':
        for (int i = 0; i < n; ++i) b[i][i] = 2;
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
        link(n - 3, n - 1, -1);
        break;
    case 'E':
        // Bourbaki labels: 1-3-4-5-6(-7-8), 2 attached to 4.
        for (int i = 0; i < n; ++i) b[i][i] = 2;
        link(0, 2, -1);
        link(1, 3, -1);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
        break;
    case 'F':
        b[0][0] = b[1][1] = 4;
        b[2][2] = b[3][3] = 2;
        link(0, 1, -2);
        link(1, 2, -2);
        link(2, 3, -1);
        break;
    case 'G':
        // alpha_1 short
        b[0][0] = 2;
        b[1][1] = 6;
        link(0, 1, -3);
        break;
    default: break;
    }
    return b;
}

std::shared_ptr<const RootDatum> RootDatum::build(char type, int rank, Flavor flavor)
{
    const IntMatrix form = symmetric_form(type, rank);
    const int n = rank;

    std::shared_ptr<RootDatum> d(new RootDatum());
    d->type_ = type;
    d->rank_ = rank;
    d->flavor_ = flavor;
    d->cartan_.assign(n, IntVector(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d->cartan_[i][j] = 2 * form[i][j] / form[j][j];

    d->cartan_q_.assign(n, RationalVector(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d->cartan_q_[i][j] = d->cartan_[i][j];
    d->cartan_inv_ = dahakit::inverse(d->cartan_q_);

    // Close the simple (root, coroot) pairs under simple reflections.
    const auto& a = d->cartan_;
    std::map<IntVector, IntVector> found;
    std::deque<std::pair<IntVector, IntVector>> queue;
    for (int i = 0; i < n; ++i) {
        IntVector e(n, 0);
        e[i] = 1;
        found.emplace(e, e);
        queue.emplace_back(e, e);
    }
    while (!queue.empty()) {
        auto [beta, cobeta] = queue.front();
        queue.pop_front();
        for (int j = 0; j < n; ++j) {
            long p = 0;  // <beta, alpha_j^vee>
            long q = 0;  // <alpha_j, beta^vee>
            for (int k = 0; k < n; ++k) {
                p += beta[k] * a[k][j];
                q += a[j][k] * cobeta[k];
            }
            IntVector b2 = beta;
            IntVector c2 = cobeta;
            b2[j] -= p;
            c2[j] -= q;
            if (found.emplace(b2, c2).second) queue.emplace_back(b2, c2);
        }
    }

    std::vector<std::pair<IntVector, IntVector>> positive;
    for (const auto& [r, c] : found) {
        if (std::all_of(r.begin(), r.end(), [](long x) { return x >= 0; })) positive.emplace_back(r, c);
    }
    std::sort(positive.begin(), positive.end(), [](const auto& x, const auto& y) {
        const long hx = std::accumulate(x.first.begin(), x.first.end(), 0L);
        const long hy = std::accumulate(y.first.begin(), y.first.end(), 0L);
        if (hx != hy) return hx < hy;
        return x.first > y.first;
    });
    if (2 * positive.size() != found.size())
        throw std::logic_error("root closure is not symmetric under negation");

    d->num_positive_ = static_cast<int>(positive.size());
    for (const auto& [r, c] : positive) {
        d->roots_.push_back(r);
        d->coroots_.push_back(c);
    }
    for (const auto& [r, c] : positive) {
        IntVector nr = r, nc = c;
        for (auto& x : nr) x = -x;
        for (auto& x : nc) x = -x;
        d->roots_.push_back(nr);
        d->coroots_.push_back(nc);
    }
    for (int k = 0; k < d->num_roots(); ++k) d->root_lookup_.emplace(d->roots_[k], k);

    d->highest_root_ = d->num_positive_ - 1;
    long coroot_sum = 0;
    for (long c : d->coroots_[d->highest_root_]) coroot_sum += c;
    d->dual_coxeter_ = static_cast<int>(coroot_sum + 1);

    // Killing form Gram matrix on simple coroots.
    d->killing_gram_.assign(n, IntVector(n, 0));
    for (int k = 0; k < d->num_roots(); ++k) {
        IntVector pairings(n, 0);
        for (int i = 0; i < n; ++i)
            for (int m = 0; m < n; ++m) pairings[i] += d->roots_[k][m] * a[m][i];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d->killing_gram_[i][j] += pairings[i] * pairings[j];
    }
    RationalMatrix gram(n, RationalVector(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram[i][j] = d->killing_gram_[i][j];
    d->star_matrix_ = dahakit::multiply(dahakit::transpose(d->cartan_inv_), gram);

    for (int i = 0; i < n; ++i) d->simple_reflections_.push_back(d->reflection(i));
    return d;
}

std::string RootDatum::name() const
{
    std::string s = std::string(1, type_) + std::to_string(rank_);
    if (flavor_ == Flavor::adjoint) s += "(adj)";
    return s;
}

int RootDatum::coxeter_exponent(int i, int j) const
{
    if (i == j) return 1;
    switch (cartan_[i][j] * cartan_[j][i]) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw std::logic_error("unexpected Cartan product");
    }
}

std::optional<int> RootDatum::root_index(const IntVector& coords) const
{
    auto it = root_lookup_.find(coords);
    if (it == root_lookup_.end()) return std::nullopt;
    return it->second;
}

long RootDatum::height(int k) const
{
    return std::accumulate(roots_[k].begin(), roots_[k].end(), 0L);
}

FinWeight RootDatum::simple_root(int i) const
{
    if (i < 0 || i >= rank_) throw std::out_of_range("simple root index out of range");
    return root_vector(i);
}

FinCoweight RootDatum::simple_coroot(int i) const
{
    if (i < 0 || i >= rank_) throw std::out_of_range("simple coroot index out of range");
    return coroot_vector(i);
}

FinWeight RootDatum::root_vector(int k) const
{
    FinWeight x{RationalVector(rank_)};
    for (int i = 0; i < rank_; ++i) x.coords[i] = roots_[k][i];
    return x;
}

FinCoweight RootDatum::coroot_vector(int k) const
{
    FinCoweight y{RationalVector(rank_)};
    for (int i = 0; i < rank_; ++i) y.coords[i] = coroots_[k][i];
    return y;
}

FinWeight RootDatum::zero_weight() const { return FinWeight{RationalVector(rank_, 0)}; }
FinCoweight RootDatum::zero_coweight() const { return FinCoweight{RationalVector(rank_, 0)}; }

Rational RootDatum::pair(const FinWeight& x, const FinCoweight& y) const
{
    if (static_cast<int>(x.coords.size()) != rank_ || static_cast<int>(y.coords.size()) != rank_)
        throw std::invalid_argument("vector does not belong to this root datum");
    Rational s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (x.coords[i] == 0) continue;
        for (int j = 0; j < rank_; ++j)
            if (cartan_[i][j] != 0) s += x.coords[i] * cartan_[i][j] * y.coords[j];
    }
    return s;
}

Rational RootDatum::pair_root(int k, const FinCoweight& y) const
{
    Rational s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (roots_[k][i] == 0) continue;
        for (int j = 0; j < rank_; ++j)
            if (cartan_[i][j] != 0) s += roots_[k][i] * cartan_[i][j] * y.coords[j];
    }
    return s;
}

Rational RootDatum::killing_form(const FinCoweight& x, const FinCoweight& y) const
{
    if (static_cast<int>(x.coords.size()) != rank_ || static_cast<int>(y.coords.size()) != rank_)
        throw std::invalid_argument("vector does not belong to this root datum");
    Rational s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) s += x.coords[i] * killing_gram_[i][j] * y.coords[j];
    return s;
}

std::pair<FinWeight, FinCoweight> RootDatum::highest_root() const
{
    return {root_vector(highest_root_), coroot_vector(highest_root_)};
}

FinWeight RootDatum::rho() const
{
    FinWeight r = zero_weight();
    for (int k = 0; k < num_positive_; ++k) r += root_vector(k);
    return Rational(1, 2) * r;
}

WeylElt RootDatum::identity() const
{
    WeylElt w;
    w.perm.resize(num_roots());
    std::iota(w.perm.begin(), w.perm.end(), 0);
    return w;
}

WeylElt RootDatum::simple_reflection(int i) const
{
    if (i < 0 || i >= rank_) throw std::out_of_range("simple reflection index out of range");
    return simple_reflections_[i];
}

WeylElt RootDatum::reflection(int k) const
{
    WeylElt w;
    w.perm.resize(num_roots());
    const IntVector& r = roots_[k];
    const IntVector& cr = coroots_[k];
    for (int b = 0; b < num_roots(); ++b) {
        long p = 0;  // <beta, r^vee>
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) p += roots_[b][i] * cartan_[i][j] * cr[j];
        IntVector img = roots_[b];
        for (int i = 0; i < rank_; ++i) img[i] -= p * r[i];
        w.perm[b] = root_lookup_.at(img);
    }
    return w;
}

WeylElt RootDatum::compose(const WeylElt& a, const WeylElt& b) const
{
    WeylElt c;
    c.perm.resize(a.perm.size());
    for (std::size_t k = 0; k < b.perm.size(); ++k) c.perm[k] = a.perm[b.perm[k]];
    return c;
}

WeylElt RootDatum::inverse(const WeylElt& w) const
{
    WeylElt inv;
    inv.perm.resize(w.perm.size());
    for (std::size_t k = 0; k < w.perm.size(); ++k) inv.perm[w.perm[k]] = static_cast<int>(k);
    return inv;
}

FinWeight RootDatum::apply(const WeylElt& w, const FinWeight& x) const
{
    FinWeight out = zero_weight();
    for (int i = 0; i < rank_; ++i) {
        if (x.coords[i] == 0) continue;
        const IntVector& img = roots_[w.perm[i]];
        for (int j = 0; j < rank_; ++j) out.coords[j] += x.coords[i] * img[j];
    }
    return out;
}

FinCoweight RootDatum::apply(const WeylElt& w, const FinCoweight& y) const
{
    FinCoweight out = zero_coweight();
    for (int i = 0; i < rank_; ++i) {
        if (y.coords[i] == 0) continue;
        const IntVector& img = coroots_[w.perm[i]];
        for (int j = 0; j < rank_; ++j) out.coords[j] += y.coords[i] * img[j];
    }
    return out;
}

int RootDatum::length(const WeylElt& w) const
{
    int len = 0;
    for (int k = 0; k < num_positive_; ++k)
        if (!is_positive(w.perm[k])) ++len;
    return len;
}

std::vector<WeylElt> RootDatum::weyl_group_elements() const
{
    std::set<WeylElt> seen{identity()};
    std::vector<WeylElt> frontier{identity()};
    while (!frontier.empty()) {
        std::vector<WeylElt> next;
        for (const auto& w : frontier)
            for (const auto& s : simple_reflections_) {
                WeylElt v = compose(s, w);
                if (seen.insert(v).second) next.push_back(std::move(v));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<FinCoweight> RootDatum::weyl_orbit(const FinCoweight& lambda) const
{
    if (static_cast<int>(lambda.coords.size()) != rank_)
        throw std::invalid_argument("coweight does not belong to this root datum");
    std::set<FinCoweight> seen{lambda};
    std::deque<FinCoweight> queue{lambda};
    while (!queue.empty()) {
        FinCoweight y = queue.front();
        queue.pop_front();
        for (int i = 0; i < rank_; ++i) {
            const Rational p = pair_root(i, y);
            if (p == 0) continue;
            FinCoweight z = y;
            z.coords[i] -= p;  // y - <alpha_i, y> alpha_i^vee
            if (seen.insert(z).second) queue.push_back(std::move(z));
        }
    }
    return {seen.begin(), seen.end()};
}

bool RootDatum::in_char_lattice(const FinWeight& x) const
{
    if (flavor_ == Flavor::adjoint)
        return std::all_of(x.coords.begin(), x.coords.end(), is_integer);
    for (int j = 0; j < rank_; ++j) {
        Rational p = 0;
        for (int i = 0; i < rank_; ++i) p += x.coords[i] * cartan_[i][j];
        if (!is_integer(p)) return false;
    }
    return true;
}

bool RootDatum::in_cochar_lattice(const FinCoweight& y) const
{
    if (flavor_ == Flavor::simply_connected)
        return std::all_of(y.coords.begin(), y.coords.end(), is_integer);
    for (int i = 0; i < rank_; ++i)
        if (!is_integer(pair_root(i, y))) return false;
    return true;
}

RationalMatrix RootDatum::char_lattice_basis() const
{
    // Fundamental weights are the rows of A^{-1}.
    if (flavor_ == Flavor::adjoint) return identity_matrix(rank_);
    return cartan_inv_;
}

RationalMatrix RootDatum::cochar_lattice_basis() const
{
    // Fundamental coweights are the columns of A^{-1}.
    if (flavor_ == Flavor::simply_connected) return identity_matrix(rank_);
    return transpose(cartan_inv_);
}

IntVector RootDatum::cochar_lattice_coords(const FinCoweight& y) const
{
    if (!in_cochar_lattice(y)) throw std::invalid_argument("coweight is not in the cocharacter lattice");
    IntVector out(rank_);
    for (int i = 0; i < rank_; ++i) {
        const Rational c = flavor_ == Flavor::simply_connected ? y.coords[i] : pair_root(i, y);
        out[i] = c.get_num().get_si();
    }
    return out;
}

FinCoweight RootDatum::from_cochar_lattice_coords(const IntVector& coords) const
{
    if (static_cast<int>(coords.size()) != rank_)
        throw std::invalid_argument("coordinate vector has wrong length");
    FinCoweight y = zero_coweight();
    if (flavor_ == Flavor::simply_connected) {
        for (int i = 0; i < rank_; ++i) y.coords[i] = coords[i];
        return y;
    }
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) y.coords[i] += cartan_inv_[i][j] * coords[j];
    return y;
}

}  // namespace dahakit
