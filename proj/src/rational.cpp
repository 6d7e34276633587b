#include "dahakit/rational.hpp"

#include <stdexcept>

namespace dahakit {

Rational parse_rational(const std::string& text)
{
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    auto check_digits = [&](const std::string& part, bool allow_sign) {
        std::size_t start = 0;
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) start = 1;
        if (start >= part.size()) throw std::invalid_argument("malformed rational: " + text);
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw std::invalid_argument("malformed rational: " + text);
    };
    std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    check_digits(num, true);
    check_digits(den, false);
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value)
{
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

RationalMatrix identity_matrix(std::size_t n)
{
    RationalMatrix m(n, RationalVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RationalMatrix transpose(const RationalMatrix& m)
{
    if (m.empty()) return {};
    RationalMatrix t(m[0].size(), RationalVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b)
{
    const std::size_t rows = a.size();
    const std::size_t inner = b.size();
    const std::size_t cols = inner ? b[0].size() : 0;
    RationalMatrix c(rows, RationalVector(cols, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != inner) throw std::invalid_argument("matrix shape mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

RationalVector multiply(const RationalMatrix& m, const RationalVector& v)
{
    RationalVector out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    }
    return out;
}

RationalMatrix inverse(const RationalMatrix& m)
{
    const std::size_t n = m.size();
    RationalMatrix a = m;
    RationalMatrix inv = identity_matrix(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::domain_error("singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational scale = 1 / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational f = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

Rational dot(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace dahakit
