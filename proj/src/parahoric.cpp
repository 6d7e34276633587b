#include "dahakit/parahoric.hpp"

#include "dahakit/afflattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace dahakit {

ParahoricType make_parahoric(const AffineWeylGroup& g, std::vector<int> subset)
{
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (!subset.empty() && (subset.front() < 0 || subset.back() > g.rank()))
        throw std::invalid_argument("parahoric index out of range");
    if (!g.parabolic_is_finite(subset)) throw std::invalid_argument("subset generates an infinite subgroup");
    return ParahoricType{std::move(subset)};
}

std::vector<ParahoricType> enumerate_standard(const RootDatum& d)
{
    // The untwisted affine diagram is connected, so W_P is finite exactly
    // when the subset is proper.
    const int nodes = d.rank() + 1;
    std::vector<ParahoricType> out;
    for (unsigned mask = 0; mask + 1 < (1u << nodes); ++mask) {
        ParahoricType p;
        for (int i = 0; i < nodes; ++i)
            if (mask & (1u << i)) p.subset.push_back(i);
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const ParahoricType& a, const ParahoricType& b) {
        if (a.subset.size() != b.subset.size()) return a.subset.size() < b.subset.size();
        return a.subset < b.subset;
    });
    return out;
}

bool has_classical_index(const RootDatum& d)
{
    return d.type() == 'A' || d.type() == 'B' || d.type() == 'C';
}

std::vector<int> to_classical_index(const RootDatum& d, const ParahoricType& p)
{
    if (!has_classical_index(d)) throw std::invalid_argument("classical indexing is only defined for types A, B, C");
    const int nodes = d.rank() + 1;
    std::vector<int> index;
    for (int i = 0; i < nodes; ++i)
        if (!std::binary_search(p.subset.begin(), p.subset.end(), i)) index.push_back(i);
    if (index.empty()) throw std::invalid_argument("subset generates an infinite subgroup");
    return index;
}

ParahoricType from_classical_index(const RootDatum& d, const std::vector<int>& index)
{
    if (!has_classical_index(d)) throw std::invalid_argument("classical indexing is only defined for types A, B, C");
    const int nodes = d.rank() + 1;
    if (index.empty()) throw std::invalid_argument("classical index must be nonempty");
    for (std::size_t k = 0; k < index.size(); ++k) {
        if (index[k] < 0 || index[k] >= nodes) throw std::invalid_argument("classical index entry out of range");
        if (k > 0 && index[k] <= index[k - 1]) throw std::invalid_argument("classical index must be strictly increasing");
    }
    ParahoricType p;
    for (int i = 0; i < nodes; ++i)
        if (!std::binary_search(index.begin(), index.end(), i)) p.subset.push_back(i);
    return p;
}

std::vector<ExtWeylElt> levi_weyl_group(const AffineWeylGroup& g, const ParahoricType& p)
{
    return g.parabolic_elements(p.subset);
}

long weyl_group_order(char type, int rank)
{
    auto factorial = [](int k) {
        long f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    switch (type) {
    case 'A': return factorial(rank + 1);
    case 'B':
    case 'C': return (1L << rank) * factorial(rank);
    case 'D': return (1L << (rank - 1)) * factorial(rank);
    case 'E': return rank == 6 ? 51840L : rank == 7 ? 2903040L : 696729600L;
    case 'F': return 1152;
    case 'G': return 12;
    default: throw std::invalid_argument("unknown Cartan type");
    }
}

long subdiagram_weyl_order(const RootDatum& d, const ParahoricType& p)
{
    const IntMatrix a = affine_cartan_matrix(d);
    const auto& nodes = p.subset;
    std::vector<int> component(nodes.size(), -1);
    long order = 1;
    for (std::size_t start = 0; start < nodes.size(); ++start) {
        if (component[start] >= 0) continue;
        std::vector<std::size_t> members{start};
        component[start] = static_cast<int>(start);
        for (std::size_t k = 0; k < members.size(); ++k)
            for (std::size_t j = 0; j < nodes.size(); ++j)
                if (component[j] < 0 && a[nodes[members[k]]][nodes[j]] != 0) {
                    component[j] = static_cast<int>(start);
                    members.push_back(j);
                }

        const int size = static_cast<int>(members.size());
        int max_bond = 1;
        std::vector<int> degree(size, 0);
        for (int x = 0; x < size; ++x)
            for (int y = 0; y < size; ++y) {
                if (x == y) continue;
                const long prod = a[nodes[members[x]]][nodes[members[y]]] * a[nodes[members[y]]][nodes[members[x]]];
                if (prod != 0) {
                    ++degree[x];
                    max_bond = std::max<int>(max_bond, static_cast<int>(prod));
                }
            }

        char type = 'A';
        int rank = size;
        if (max_bond == 3) {
            type = 'G';
        } else if (max_bond == 2) {
            // F4 has its double bond between two nodes of degree 2.
            type = 'B';
            if (size == 4) {
                for (int x = 0; x < size; ++x)
                    for (int y = 0; y < size; ++y)
                        if (x != y && a[nodes[members[x]]][nodes[members[y]]] * a[nodes[members[y]]][nodes[members[x]]] == 2 &&
                            degree[x] == 2 && degree[y] == 2)
                            type = 'F';
            }
        } else {
            int branch = -1;
            for (int x = 0; x < size; ++x)
                if (degree[x] >= 3) branch = x;
            if (branch >= 0) {
                // Arm lengths away from the branch node.
                std::vector<int> arms;
                for (int y = 0; y < size; ++y) {
                    if (y == branch || a[nodes[members[branch]]][nodes[members[y]]] == 0) continue;
                    int len = 1, prev = branch, cur = y;
                    for (bool more = true; more;) {
                        more = false;
                        for (int z = 0; z < size; ++z)
                            if (z != prev && z != cur && a[nodes[members[cur]]][nodes[members[z]]] != 0) {
                                prev = cur;
                                cur = z;
                                ++len;
                                more = true;
                                break;
                            }
                    }
                    arms.push_back(len);
                }
                std::sort(arms.begin(), arms.end());
                type = (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) ? 'D' : 'E';
                if (arms.size() != 3) throw std::logic_error("unexpected sub-diagram shape");
            }
        }
        order *= weyl_group_order(type, rank);
    }
    return order;
}

std::string to_string(const ParahoricType& p)
{
    std::string s = "{";
    for (std::size_t k = 0; k < p.subset.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(p.subset[k]);
    }
    return s + "}";
}

}  // namespace dahakit
