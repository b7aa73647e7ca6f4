#include "haken/smith.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace haken {

std::vector<BigInt> SmithForm::torsion() const {
  std::vector<BigInt> out;
  for (const auto& d : invariant_factors) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

namespace {

bool find_min_entry(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  BigInt best;
  for (std::size_t i = t; i < a.size(); ++i) {
    for (std::size_t j = t; j < a[i].size(); ++j) {
      if (a[i][j] == 0) continue;
      BigInt v = abs(a[i][j]);
      if (!found || v < best) {
        best = v;
        pi = i;
        pj = j;
        found = true;
        if (best == 1) return true;
      }
    }
  }
  return found;
}

void swap_cols(IntMatrix& a, std::size_t x, std::size_t y) {
  if (x == y) return;
  for (auto& row : a) std::swap(row[x], row[y]);
}

}  // namespace

SmithForm smith_normal_form(IntMatrix a) {
  SmithForm out;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t t = 0;
  while (t < std::min(rows, cols)) {
    std::size_t pi = 0, pj = 0;
    if (!find_min_entry(a, t, pi, pj)) break;
    std::swap(a[t], a[pi]);
    swap_cols(a, t, pj);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // move the smallest remainder in row/column t onto the diagonal and retry
        std::size_t bi = t, bj = t;
        BigInt best = abs(a[t][t]);
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a[i][t] != 0 && abs(a[i][t]) < best) {
            best = abs(a[i][t]);
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[t][j] != 0 && abs(a[t][j]) < best) {
            best = abs(a[t][j]);
            bi = t;
            bj = j;
          }
        }
        std::swap(a[t], a[bi]);
        swap_cols(a, t, bj);
        continue;
      }
      // divisibility: d_t must divide every remaining entry
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    out.invariant_factors.push_back(abs(a[t][t]));
    ++t;
  }
  out.rank = t;
  return out;
}

void SparseIntMatrix::set(std::size_t row, std::size_t col, BigInt value) {
  auto& c = columns_.at(col);
  if (value == 0) {
    c.erase(static_cast<std::uint32_t>(row));
  } else {
    c[static_cast<std::uint32_t>(row)] = std::move(value);
  }
}

IntMatrix SparseIntMatrix::to_dense() const {
  IntMatrix d(rows_, std::vector<BigInt>(cols_));
  for (std::size_t c = 0; c < cols_; ++c) {
    for (const auto& [r, v] : columns_[c]) d[r][c] = v;
  }
  return d;
}

SmithForm smith_normal_form(const SparseIntMatrix& m) {
  // row-major working copy plus a column → rows index
  std::vector<std::map<std::uint32_t, BigInt>> rows(m.rows());
  std::vector<std::set<std::uint32_t>> col_rows(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& [r, v] : m.column(c)) {
      rows[r].emplace(static_cast<std::uint32_t>(c), v);
      col_rows[c].insert(r);
    }
  }

  std::size_t unit_rank = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (col_rows[c].empty()) continue;
      std::uint32_t pivot_row = 0;
      std::size_t best = SIZE_MAX;
      for (auto r : col_rows[c]) {
        const auto& v = rows[r].at(static_cast<std::uint32_t>(c));
        if ((v == 1 || v == -1) && rows[r].size() < best) {
          best = rows[r].size();
          pivot_row = r;
        }
      }
      if (best == SIZE_MAX) continue;
      const auto cc = static_cast<std::uint32_t>(c);
      const BigInt p = rows[pivot_row].at(cc);
      const std::vector<std::uint32_t> targets(col_rows[c].begin(), col_rows[c].end());
      for (auto r : targets) {
        if (r == pivot_row) continue;
        const BigInt factor = rows[r].at(cc) * p;
        for (const auto& [pc, pv] : rows[pivot_row]) {
          auto it = rows[r].find(pc);
          if (it == rows[r].end()) {
            rows[r].emplace(pc, -factor * pv);
            col_rows[pc].insert(r);
          } else {
            it->second -= factor * pv;
            if (it->second == 0) {
              rows[r].erase(it);
              col_rows[pc].erase(r);
            }
          }
        }
      }
      for (const auto& [pc, pv] : rows[pivot_row]) col_rows[pc].erase(pivot_row);
      rows[pivot_row].clear();
      ++unit_rank;
      progress = true;
    }
  }

  // dense residue
  std::vector<std::uint32_t> live_rows, live_cols;
  for (std::uint32_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].empty()) live_rows.push_back(r);
  }
  for (std::uint32_t c = 0; c < col_rows.size(); ++c) {
    if (!col_rows[c].empty()) live_cols.push_back(c);
  }
  std::unordered_map<std::uint32_t, std::size_t> col_index;
  for (std::size_t j = 0; j < live_cols.size(); ++j) col_index[live_cols[j]] = j;
  IntMatrix residue(live_rows.size(), std::vector<BigInt>(live_cols.size()));
  for (std::size_t i = 0; i < live_rows.size(); ++i) {
    for (const auto& [c, v] : rows[live_rows[i]]) residue[i][col_index.at(c)] = v;
  }
  SmithForm dense = smith_normal_form(std::move(residue));

  SmithForm out;
  out.rank = unit_rank + dense.rank;
  out.invariant_factors.assign(unit_rank, BigInt(1));
  out.invariant_factors.insert(out.invariant_factors.end(), dense.invariant_factors.begin(),
                               dense.invariant_factors.end());
  return out;
}

}  // namespace haken
