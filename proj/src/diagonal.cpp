#include "permdiag/diagonal.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "permdiag/matrices.hpp"

namespace pd {

static std::shared_ptr<const TensorChain> cached_top(int n)
{
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const TensorChain>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    auto t = std::make_shared<TensorChain>();
    for (const auto& c : enumerate_configurations(n)) {
        MatrixFaces f = faces_of_matrix(c.matrix);
        t->add({f.column_face, f.row_face}, c.sign);
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.try_emplace(n, std::move(t)).first->second;
}

TensorChain diagonal_top(int n)
{
    require(n >= 0, Errc::out_of_range, "n must be non-negative");
    return *cached_top(n);
}

static int block_dim(const Blocks& b)
{
    int total = 0;
    for (const auto& x : b) total += static_cast<int>(x.size());
    return total - static_cast<int>(b.size());
}

TensorChain diagonal_face(const OrderedPartition& u)
{
    struct Partial {
        Blocks left, right;
        Coef coef;
        int right_dim;
    };
    std::vector<Partial> acc{{{}, {}, 1, 0}};
    for (const auto& block : u.blocks()) {
        auto top = cached_top(static_cast<int>(block.size()) - 1);
        std::vector<Partial> next;
        next.reserve(acc.size() * top->size());
        for (const auto& [pr, c] : *top) {
            Blocks a = relabel(pr.first, block);
            Blocks b = relabel(pr.second, block);
            const int da = block_dim(a), db = block_dim(b);
            for (const auto& p : acc) {
                Partial q = p;
                q.left.insert(q.left.end(), a.begin(), a.end());
                q.right.insert(q.right.end(), b.begin(), b.end());
                Coef s = checked_mul(p.coef, c);
                if ((p.right_dim * da) % 2) s = -s;
                q.coef = s;
                q.right_dim += db;
                next.push_back(std::move(q));
            }
        }
        acc = std::move(next);
    }
    TensorChain out;
    const int n = u.ground_size();
    for (auto& p : acc) out.add({OrderedPartition(n, std::move(p.left)), OrderedPartition(n, std::move(p.right))}, p.coef);
    return out;
}

TensorChain diagonal(const Chain& c)
{
    TensorChain out;
    for (const auto& [u, coef] : c) out.add(diagonal_face(u), coef);
    return out;
}

FacePair transpose_term(const FacePair& t) { return {t.second.reversed(), t.first.reversed()}; }

CoderivationReport verify_coderivation(int n)
{
    require(n >= 1, Errc::out_of_range, "n must be at least 1");
    const OrderedPartition top = OrderedPartition::top(n + 1);
    TensorChain lhs = diagonal(boundary(top));
    TensorChain rhs = tensor_boundary(diagonal_top(n));
    CoderivationReport r;
    r.residual = lhs - rhs;
    r.ok = r.residual.empty();
    return r;
}

}  // namespace pd
