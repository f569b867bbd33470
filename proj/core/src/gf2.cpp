#include "pcsp/gf2.hpp"

#include "pcsp/errors.hpp"

namespace pcsp {

void F2System::add(std::vector<int> support, int parity) {
  for (int v : support)
    require(v >= 0 && v < num_vars, Errc::LengthMismatch, "equation variable out of range");
  equations.push_back({std::move(support), parity & 1});
}

std::optional<std::vector<std::uint8_t>> gauss_f2(const F2System& s) {
  const int n = s.num_vars;
  const std::size_t width = static_cast<std::size_t>(n) + 1; // last bit = parity
  std::vector<BitVec> rows;
  rows.reserve(s.equations.size());
  for (const auto& eq : s.equations) {
    BitVec row(width);
    for (int v : eq.support) row.assign(v, !row.test(v)); // repeats cancel
    if (eq.parity) row.set(n);
    rows.push_back(std::move(row));
  }

  std::size_t rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && !rows[sel].test(col)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && rows[i].test(col)) rows[i] ^= rows[rank];
    pivot_col.push_back(col);
    ++rank;
  }
  // Contradiction row 0 = 1 certifies infeasibility.
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (rows[i].test(n)) return std::nullopt;

  std::vector<std::uint8_t> x(n, 0); // free variables stay zero
  for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = rows[i].test(n) ? 1 : 0;
  return x;
}

} // namespace pcsp
