#include "prodquot/todd_coxeter.hpp"

#include <cstddef>
#include <vector>

#include "prodquot/errors.hpp"

namespace prodquot {

namespace {

// Workspace for one enumeration.  Cosets are rows of a flat table with one
// column per generator letter (2g = generator g, 2g+1 = its inverse); -1 is
// undefined.  Dead cosets are tracked by a union-find forest in which the
// smallest member of each merged class survives.
class Enumerator {
public:
    Enumerator(const Presentation& P, std::uint32_t max_cosets)
        : width_(2 * static_cast<std::uint32_t>(P.generator_names.size())),
          max_cosets_(max_cosets) {
        if (max_cosets_ == 0)
            throw Error("coset limit must be positive");
        relators_.reserve(P.relators.size());
        for (const Word& w : P.relators) {
            std::vector<std::uint32_t> cols;
            cols.reserve(w.letters.size());
            for (Letter l : w.letters)
                cols.push_back(2 * l.gen + (l.exp > 0 ? 0u : 1u));
            if (!cols.empty()) relators_.push_back(std::move(cols));
        }
        new_coset();  // coset 0: the subgroup itself
    }

    CosetTable run() {
        for (std::uint32_t alpha = 0; alpha < count(); ++alpha) {
            if (!live(alpha)) continue;
            for (const auto& rel : relators_) {
                scan_and_fill(alpha, rel);
                if (!live(alpha)) break;
            }
            if (!live(alpha)) continue;
            for (std::uint32_t col = 0; col < width_; ++col)
                if (entry(alpha, col) < 0) define(alpha, col);
        }
        return compress();
    }

private:
    static std::uint32_t inverse_column(std::uint32_t col) { return col ^ 1u; }

    std::uint32_t count() const { return static_cast<std::uint32_t>(parent_.size()); }
    bool live(std::uint32_t c) const { return parent_[c] == c; }

    std::int32_t& entry(std::uint32_t coset, std::uint32_t col) {
        return table_[static_cast<std::size_t>(coset) * width_ + col];
    }

    std::uint32_t find(std::uint32_t c) {
        std::uint32_t root = c;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[c] != root) {
            std::uint32_t next = parent_[c];
            parent_[c] = root;
            c = next;
        }
        return root;
    }

    std::uint32_t new_coset() {
        if (count() >= max_cosets_)
            throw CosetLimitExceeded(
                "enumeration exceeded the coset limit of " +
                    std::to_string(max_cosets_) +
                    " (group may be infinite, or the limit too small)",
                max_cosets_);
        parent_.push_back(count());
        table_.resize(table_.size() + width_, -1);
        return count() - 1;
    }

    std::uint32_t define(std::uint32_t coset, std::uint32_t col) {
        std::uint32_t fresh = new_coset();
        entry(coset, col) = static_cast<std::int32_t>(fresh);
        entry(fresh, inverse_column(col)) = static_cast<std::int32_t>(coset);
        return fresh;
    }

    void merge(std::uint32_t a, std::uint32_t b, std::vector<std::uint32_t>& queue) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        queue.push_back(b);
    }

    // Merges two cosets and transfers every table entry of each dead coset
    // to its surviving representative, queueing the secondary merges that
    // conflicting entries imply.  On return no entry references a dead
    // coset and all entries are reciprocal.
    void coincidence(std::uint32_t a, std::uint32_t b) {
        std::vector<std::uint32_t> queue;
        merge(a, b, queue);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            std::uint32_t dead = queue[qi];
            for (std::uint32_t col = 0; col < width_; ++col) {
                std::int32_t target = entry(dead, col);
                if (target < 0) continue;
                // The reverse edge duplicates this one; drop it so the edge
                // is transferred exactly once.
                entry(static_cast<std::uint32_t>(target), inverse_column(col)) = -1;
                std::uint32_t mu = find(dead);
                std::uint32_t nu = find(static_cast<std::uint32_t>(target));
                std::int32_t mu_col = entry(mu, col);
                if (mu_col >= 0) {
                    merge(nu, static_cast<std::uint32_t>(mu_col), queue);
                } else if (std::int32_t nu_back = entry(nu, inverse_column(col));
                           nu_back >= 0) {
                    merge(mu, static_cast<std::uint32_t>(nu_back), queue);
                } else {
                    entry(mu, col) = static_cast<std::int32_t>(nu);
                    entry(nu, inverse_column(col)) = static_cast<std::int32_t>(mu);
                }
            }
        }
    }

    // Traces one relator from `alpha` forwards and backwards, creating the
    // cosets needed to complete the cycle; the meeting point either closes
    // cleanly, forces a deduction, or reveals a coincidence.
    void scan_and_fill(std::uint32_t alpha, const std::vector<std::uint32_t>& rel) {
        std::uint32_t f = alpha;
        std::uint32_t b = alpha;
        std::size_t i = 0;
        std::size_t j = rel.size();  // backward scan consumed letters [j, end)
        for (;;) {
            while (i < j && entry(f, rel[i]) >= 0)
                f = static_cast<std::uint32_t>(entry(f, rel[i++]));
            if (i == j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j > i && entry(b, inverse_column(rel[j - 1])) >= 0)
                b = static_cast<std::uint32_t>(entry(b, inverse_column(rel[--j])));
            if (j == i) {
                if (f != b) coincidence(f, b);
                return;
            }
            if (j == i + 1) {
                entry(f, rel[i]) = static_cast<std::int32_t>(b);
                entry(b, inverse_column(rel[i])) = static_cast<std::int32_t>(f);
                return;
            }
            f = define(f, rel[i++]);
        }
    }

    CosetTable compress() {
        std::vector<std::int32_t> renumber(count(), -1);
        std::uint32_t live_count = 0;
        for (std::uint32_t c = 0; c < count(); ++c)
            if (live(c)) renumber[c] = static_cast<std::int32_t>(live_count++);
        CosetTable T;
        T.generator_count = width_ / 2;
        T.live_cosets = live_count;
        T.rows.resize(live_count, std::vector<std::int32_t>(width_, -1));
        for (std::uint32_t c = 0; c < count(); ++c) {
            if (!live(c)) continue;
            for (std::uint32_t col = 0; col < width_; ++col) {
                std::int32_t target = entry(c, col);
                T.rows[static_cast<std::size_t>(renumber[c])][col] =
                    target < 0 ? -1 : renumber[static_cast<std::uint32_t>(target)];
            }
        }
        return T;
    }

    std::uint32_t width_;
    std::uint32_t max_cosets_;
    std::vector<std::vector<std::uint32_t>> relators_;
    std::vector<std::int32_t> table_;
    std::vector<std::uint32_t> parent_;
};

}  // namespace

bool CosetTable::closed() const {
    if (rows.empty() || live_cosets != rows.size()) return false;
    for (const auto& row : rows) {
        if (row.size() != 2 * static_cast<std::size_t>(generator_count)) return false;
        for (std::int32_t e : row)
            if (e < 0 || e >= static_cast<std::int32_t>(rows.size())) return false;
    }
    return true;
}

CosetTable todd_coxeter(const Presentation& P, std::uint32_t max_cosets) {
    return Enumerator(P, max_cosets).run();
}

std::pair<std::uint32_t, std::vector<Perm>> permutation_rep(const CosetTable& T) {
    if (!T.closed())
        throw TableNotClosed("permutation representation requires a closed table");
    std::uint32_t degree = T.live_cosets;
    std::vector<Perm> gens;
    gens.reserve(T.generator_count);
    for (std::uint32_t g = 0; g < T.generator_count; ++g) {
        std::vector<std::uint32_t> img(degree);
        for (std::uint32_t c = 0; c < degree; ++c)
            img[c] = static_cast<std::uint32_t>(T.rows[c][2 * g]);
        Perm p(std::move(img));
        p.validate();
        gens.push_back(std::move(p));
    }
    return {degree, std::move(gens)};
}

}  // namespace prodquot
