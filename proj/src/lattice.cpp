#include "lamk/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "lamk/errors.hpp"

namespace lamk {

namespace {

void axpy(IntVector& row, const Integer& q, const IntVector& pivot) {
  if (q == 0) return;
  for (std::size_t k = 0; k < row.size(); ++k)
    if (pivot[k] != 0) row[k] -= q * pivot[k];
}

bool is_zero_row(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows, std::size_t columns) {
  for (const auto& r : rows)
    if (r.size() != columns) throw InputError("generator length does not match the ambient rank");
  std::erase_if(rows, is_zero_row);
  std::size_t top = 0;
  for (std::size_t col = 0; col < columns && top < rows.size(); ++col) {
    // Euclid across rows until a single row carries this column.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col]))) best = i;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool others = false;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[top][col].get_mpz_t());
        axpy(rows[i], q, rows[top]);
        if (rows[i][col] != 0) others = true;
      }
      if (!others) break;
    }
    if (rows[top][col] == 0) continue;
    if (rows[top][col] < 0)
      for (auto& x : rows[top]) x = -x;
    for (std::size_t i = 0; i < top; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[top][col].get_mpz_t());
      axpy(rows[i], q, rows[top]);
    }
    ++top;
    std::erase_if(rows, is_zero_row);
  }
  rows.resize(std::min(rows.size(), top));
  return rows;
}

std::vector<Integer> smith_invariants(IntMatrix m, std::size_t columns) {
  std::erase_if(m, is_zero_row);
  const std::size_t nrows = m.size();
  std::size_t t = 0;
  std::vector<Integer> diag;
  while (t < nrows && t < columns) {
    // Pick the smallest nonzero entry in the remaining block as pivot.
    std::size_t pi = nrows, pj = columns;
    for (std::size_t i = t; i < nrows; ++i)
      for (std::size_t j = t; j < columns; ++j)
        if (m[i][j] != 0 && (pi == nrows || abs(m[i][j]) < abs(m[pi][pj]))) pi = i, pj = j;
    if (pi == nrows) break;
    std::swap(m[t], m[pi]);
    for (auto& row : m) std::swap(row[t], row[pj]);

    bool done = false;
    while (!done) {
      done = true;
      for (std::size_t i = t + 1; i < nrows; ++i) {
        if (m[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        axpy(m[i], q, m[t]);
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          done = false;
        }
      }
      for (std::size_t j = t + 1; j < columns; ++j) {
        if (m[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t i = t; i < nrows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          done = false;
        }
      }
      if (done) {
        // Divisibility: the pivot must divide every remaining entry.
        for (std::size_t i = t + 1; i < nrows && done; ++i)
          for (std::size_t j = t + 1; j < columns && done; ++j)
            if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
              for (std::size_t k = t; k < columns; ++k) m[t][k] += m[i][k];
              done = false;
            }
      }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

IntegerLattice IntegerLattice::from_generators(std::size_t ambient_rank, const IntMatrix& generators) {
  IntegerLattice l(ambient_rank);
  l.basis_ = hermite_normal_form(generators, ambient_rank);
  return l;
}

IntegerLattice IntegerLattice::full(std::size_t ambient_rank) {
  IntMatrix id(ambient_rank, IntVector(ambient_rank));
  for (std::size_t i = 0; i < ambient_rank; ++i) id[i][i] = 1;
  IntegerLattice l(ambient_rank);
  l.basis_ = std::move(id);
  return l;
}

std::optional<IntVector> IntegerLattice::coordinates(std::span<const Integer> v) const {
  if (v.size() != ambient_) throw InputError("vector length does not match the lattice ambient rank");
  IntVector rest(v.begin(), v.end());
  IntVector coords;
  coords.reserve(basis_.size());
  std::size_t col = 0;
  for (const auto& row : basis_) {
    while (row[col] == 0) {
      if (rest[col] != 0) return std::nullopt;
      ++col;
    }
    if (!mpz_divisible_p(rest[col].get_mpz_t(), row[col].get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), rest[col].get_mpz_t(), row[col].get_mpz_t());
    axpy(rest, q, row);
    coords.push_back(q);
  }
  if (!is_zero_row(rest)) return std::nullopt;
  return coords;
}

bool IntegerLattice::contains(const IntegerLattice& other) const {
  if (other.ambient_ != ambient_) throw InputError("lattice rank mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(), [this](const IntVector& r) { return contains(r); });
}

IntegerLattice IntegerLattice::operator+(const IntegerLattice& other) const {
  if (other.ambient_ != ambient_) throw InputError("lattice rank mismatch");
  return with_generators(other.basis_);
}

IntegerLattice IntegerLattice::scaled(const Integer& c) const {
  IntMatrix rows = basis_;
  for (auto& r : rows)
    for (auto& x : r) x *= c;
  return from_generators(ambient_, rows);
}

IntegerLattice IntegerLattice::with_generators(const IntMatrix& more) const {
  IntMatrix rows = basis_;
  rows.insert(rows.end(), more.begin(), more.end());
  return from_generators(ambient_, rows);
}

std::string GroupInvariants::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << "Z";
    if (free_rank > 1) out << "^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    out << (first ? "" : " + ") << "Z/" << t.get_str();
    first = false;
  }
  return first ? "0" : out.str();
}

GroupInvariants quotient_invariants(const IntegerLattice& ambient, const IntegerLattice& sub) {
  if (ambient.ambient_rank() != sub.ambient_rank()) throw InputError("lattice rank mismatch");
  IntMatrix rel;
  for (const auto& row : sub.basis()) {
    auto c = ambient.coordinates(row);
    if (!c) throw InputError("sub-lattice is not contained in the ambient lattice");
    rel.push_back(std::move(*c));
  }
  GroupInvariants g;
  const auto diag = smith_invariants(rel, ambient.rank());
  for (const auto& d : diag)
    if (d != 1) g.torsion.push_back(d);
  g.free_rank = ambient.rank() - diag.size();
  return g;
}

}  // namespace lamk
