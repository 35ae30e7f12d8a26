#include "wrnet/arrangement.hpp"

#include <map>
#include <set>

#include "wrnet/errors.hpp"
#include "wrnet/linalg.hpp"

namespace wrnet {

namespace {

using linalg::Matrix;
using Key = std::vector<std::size_t>;

struct LocalFace
{
    RatVec rep;
    Key zeros;  // hyperplanes through the face
};

// Faces of the arrangement restricted to a flat. A flat is identified by the
// set of hyperplanes containing it, so each one is enumerated once.
class FaceEnumerator
{
public:
    FaceEnumerator(const std::vector<RatVec>& normals, std::size_t dim) : a_(normals), dim_(dim) {}

    std::vector<ArrangementFace> run()
    {
        Matrix id(dim_, zeros(dim_));
        for (std::size_t i = 0; i < dim_; ++i) id[i][i] = 1;
        const auto& faces = faces_of(id, containing(id));
        std::vector<ArrangementFace> out;
        std::set<std::vector<int>> seen;
        for (const auto& f : faces) {
            auto s = signs(f.rep);
            if (seen.insert(s).second) out.push_back({f.rep, std::move(s)});
        }
        return out;
    }

private:
    Key containing(const Matrix& basis) const
    {
        Key k;
        for (std::size_t j = 0; j < a_.size(); ++j) {
            bool all = true;
            for (const auto& b : basis)
                if (dot(a_[j], b) != 0) {
                    all = false;
                    break;
                }
            if (all) k.push_back(j);
        }
        return k;
    }

    Key zero_set(const RatVec& p) const
    {
        Key k;
        for (std::size_t j = 0; j < a_.size(); ++j)
            if (dot(a_[j], p) == 0) k.push_back(j);
        return k;
    }

    std::vector<int> signs(const RatVec& p) const
    {
        std::vector<int> s(a_.size());
        for (std::size_t j = 0; j < a_.size(); ++j) s[j] = sign(dot(a_[j], p));
        return s;
    }

    // Vector inside span(basis) with positive inner product against a.
    static RatVec push_direction(const Matrix& basis, const RatVec& a)
    {
        RatVec n = zeros(a.size());
        for (const auto& b : basis) axpy(n, dot(b, a), b);
        return n;
    }

    const std::vector<LocalFace>& faces_of(const Matrix& basis, const Key& key)
    {
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::vector<LocalFace> out;
        std::set<std::vector<int>> seen;
        auto add = [&](RatVec rep, Key zs) {
            if (seen.insert(signs(rep)).second) out.push_back({std::move(rep), std::move(zs)});
        };

        const std::size_t d = basis.size();
        std::vector<std::size_t> cutting;
        {
            std::size_t k = 0;
            for (std::size_t j = 0; j < a_.size(); ++j) {
                if (k < key.size() && key[k] == j) {
                    ++k;
                    continue;
                }
                cutting.push_back(j);
            }
        }

        if (d == 0) {
            // only the origin
        } else if (cutting.empty()) {
            add(basis[0], key);
        } else if (d == 1) {
            add(basis[0], key);
            add(RatVec(Rational(-1) * basis[0]), key);
        } else {
            // Distinct restrictions F ∩ H_i, each with one hyperplane index.
            std::map<Key, std::pair<Matrix, std::size_t>> subflats;
            for (auto i : cutting) {
                RatVec u(d);
                for (std::size_t r = 0; r < d; ++r) u[r] = dot(basis[r], a_[i]);
                auto ker = linalg::kernel_basis({u}, d);
                Matrix sub;
                for (const auto& c : ker) {
                    RatVec v = zeros(dim_);
                    for (std::size_t r = 0; r < d; ++r)
                        if (c[r] != 0) axpy(v, c[r], basis[r]);
                    sub.push_back(std::move(v));
                }
                auto subkey = containing(sub);
                subflats.emplace(subkey, std::make_pair(std::move(sub), i));
            }
            for (const auto& [subkey, entry] : subflats) {
                const auto& [sub, i] = entry;
                // Copy: recursion may rehash the memo.
                auto subfaces = faces_of(sub, subkey);
                auto n = push_direction(basis, a_[i]);
                for (const auto& f : subfaces) {
                    add(f.rep, f.zeros);
                    if (f.zeros != subkey) continue;  // not a top cell of the subflat
                    Rational eps = 1;
                    for (auto j : cutting) {
                        Rational ap = dot(a_[j], f.rep);
                        Rational an = dot(a_[j], n);
                        if (ap == 0 || an == 0) continue;
                        Rational bound = abs(ap) / (2 * abs(an));
                        if (bound < eps) eps = bound;
                    }
                    RatVec plus = f.rep;
                    axpy(plus, eps, n);
                    RatVec minus = f.rep;
                    axpy(minus, -eps, n);
                    add(plus, zero_set(plus));
                    add(minus, zero_set(minus));
                }
            }
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

    const std::vector<RatVec>& a_;
    std::size_t dim_;
    std::map<Key, std::vector<LocalFace>> memo_;
};

}  // namespace

std::vector<ArrangementFace> arrangement_faces(const std::vector<RatVec>& normals, std::size_t dim)
{
    for (const auto& a : normals) {
        if (a.size() != dim) throw PreconditionError("normal has wrong dimension");
        if (is_zero(a)) throw PreconditionError("zero normal in arrangement");
    }
    if (dim == 0) return {};
    return FaceEnumerator(normals, dim).run();
}

}  // namespace wrnet
