#include "chevpres/todd_coxeter.hpp"
#include <algorithm>

#include <deque>
#include <stdexcept>

namespace chevpres {

namespace {

class Enumerator {
 public:
  Enumerator(const Presentation& pres, long long max_cosets)
      : ngens_(static_cast<int>(pres.generators.size())),
        ncols_(2 * std::max(ngens_, 1)),
        max_cosets_(max_cosets) {
    for (const Word& w : pres.relators) {
      std::vector<std::int32_t> cols;
      for (const Letter& l : w.letters()) {
        std::int32_t col = l.exp > 0 ? 2 * l.gen : 2 * l.gen + 1;
        for (int t = 0; t < (l.exp > 0 ? l.exp : -l.exp); ++t)
          cols.push_back(col);
      }
      // cyclic reduction: trim conjugating prefixes
      std::size_t lo = 0, hi = cols.size();
      while (hi - lo >= 2 && cols[lo] == (cols[hi - 1] ^ 1)) {
        ++lo;
        --hi;
      }
      cols.assign(cols.begin() + lo, cols.begin() + hi);
      if (!cols.empty()) relators_.push_back(std::move(cols));
    }
    // scanning short relators first closes tables with fewer spurious cosets
    std::stable_sort(relators_.begin(), relators_.end(),
                     [](const auto& x, const auto& y) {
                       return x.size() < y.size();
                     });
    // coset 1
    table_.assign(ncols_, 0);
    parent_ = {0, 1};
    rows_ = 1;
    alive_ = 1;
  }

  CosetTable run() {
    CosetTable out;
    out.ngens = ngens_;
    if (ngens_ == 0) {
      out.status = CosetStatus::closed;
      out.cosets = 1;
      return out;
    }
    for (std::int32_t alpha = 1; alpha <= rows_; ++alpha) {
      if (rep(alpha) != alpha) continue;
      for (const auto& rel : relators_) {
        if (!scan_and_fill(alpha, rel)) {
          out.status = CosetStatus::overflowed;
          out.cosets = alive_;
          return out;
        }
        if (rep(alpha) != alpha) break;
      }
      if (rep(alpha) != alpha) continue;
      for (std::int32_t c = 0; c < ncols_; ++c)
        if (at(alpha, c) == 0) {
          if (!define(alpha, c)) {
            out.status = CosetStatus::overflowed;
            out.cosets = alive_;
            return out;
          }
        }
    }

    // renumber live cosets by first appearance
    std::vector<std::int32_t> newid(rows_ + 1, 0);
    std::int32_t next = 0;
    for (std::int32_t i = 1; i <= rows_; ++i)
      if (rep(i) == i) newid[i] = ++next;
    out.status = CosetStatus::closed;
    out.cosets = next;
    out.table.assign(static_cast<std::size_t>(next) * ncols_, 0);
    for (std::int32_t i = 1; i <= rows_; ++i) {
      if (rep(i) != i) continue;
      for (std::int32_t c = 0; c < ncols_; ++c) {
        std::int32_t target = at(i, c);
        out.table[(newid[i] - 1) * ncols_ + c] =
            target == 0 ? 0 : newid[rep(target)];
      }
    }
    return out;
  }

 private:
  std::int32_t& at(std::int32_t coset, std::int32_t col) {
    return table_[static_cast<std::size_t>(coset - 1) * ncols_ + col];
  }

  std::int32_t rep(std::int32_t k) {
    while (parent_[k] != k) {
      parent_[k] = parent_[parent_[k]];
      k = parent_[k];
    }
    return k;
  }

  bool define(std::int32_t alpha, std::int32_t col) {
    if (rows_ >= max_cosets_) return false;
    std::int32_t beta = ++rows_;
    table_.resize(static_cast<std::size_t>(rows_) * ncols_, 0);
    parent_.push_back(beta);
    ++alive_;
    at(alpha, col) = beta;
    at(beta, col ^ 1) = alpha;
    return true;
  }

  void merge(std::int32_t a, std::int32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --alive_;
    queue_.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    merge(a, b);
    while (!queue_.empty()) {
      std::int32_t gamma = queue_.front();
      queue_.pop_front();
      for (std::int32_t c = 0; c < ncols_; ++c) {
        std::int32_t delta = at(gamma, c);
        if (delta == 0) continue;
        at(delta, c ^ 1) = 0;
        std::int32_t mu = rep(gamma);
        std::int32_t nu = rep(delta);
        if (at(mu, c) != 0) {
          merge(nu, at(mu, c));
        } else if (at(nu, c ^ 1) != 0) {
          merge(mu, at(nu, c ^ 1));
        } else {
          at(mu, c) = nu;
          at(nu, c ^ 1) = mu;
        }
      }
    }
  }

  // returns false on overflow
  bool scan_and_fill(std::int32_t alpha, const std::vector<std::int32_t>& rel) {
    std::int32_t f = alpha, b = alpha;
    std::int32_t i = 0, j = static_cast<std::int32_t>(rel.size()) - 1;
    while (true) {
      while (i <= j && at(f, rel[i]) != 0) {
        f = rep(at(f, rel[i]));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && at(b, rel[j] ^ 1) != 0) {
        b = rep(at(b, rel[j] ^ 1));
        --j;
      }
      if (j < i) {
        if (f != b) coincidence(f, b);
        return true;
      }
      if (j == i) {  // deduction closes the scan
        at(f, rel[i]) = b;
        at(b, rel[i] ^ 1) = f;
        return true;
      }
      if (!define(f, rel[i])) return false;
    }
  }

  int ngens_, ncols_;
  long long max_cosets_;
  std::vector<std::vector<std::int32_t>> relators_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::deque<std::int32_t> queue_;
  std::int32_t rows_ = 0;
  long long alive_ = 0;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& pres, long long max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("max_cosets must be positive");
  Enumerator e(pres, max_cosets);
  return e.run();
}

}  // namespace chevpres
