#include "glr/smith.hpp"

#include <optional>

#include "glr/errors.hpp"

namespace glr {

namespace {

// Quotient rounded to nearest, so the remainder satisfies 2|r| <= |b|.
Int nearest_quotient(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (2 * abs(r) > abs(b)) q += ((r > 0) == (b > 0)) ? 1 : -1;
  return q;
}

std::optional<std::pair<std::size_t, std::size_t>> min_nonzero(
    const IntMatrix& d, std::size_t from) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = from; i < d.rows(); ++i)
    for (std::size_t j = from; j < d.cols(); ++j) {
      if (d.at(i, j) == 0) continue;
      if (!best || abs(d.at(i, j)) < abs(d.at(best->first, best->second)))
        best = {{i, j}};
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm f{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  IntMatrix& d = f.d;
  const std::size_t steps = std::min(d.rows(), d.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    {
      const auto pivot = min_nonzero(d, t);
      if (!pivot) break;  // remaining block zero; the diagonal ends here
      d.swap_rows(t, pivot->first);
      f.u.swap_rows(t, pivot->first);
      d.swap_cols(t, pivot->second);
      f.v.swap_cols(t, pivot->second);
    }

    for (;;) {
      // Column gcd phase: bring the smallest entry of column t to the pivot
      // and reduce the rest, Euclid style.  Keeping the running minimum in
      // the pivot seat bounds quotient growth; promoting raw remainders by
      // whole-row swaps mid sweep makes the off-column entries explode.
      for (;;) {
        std::size_t im = t;
        for (std::size_t i = t; i < d.rows(); ++i) {
          if (d.at(i, t) == 0) continue;
          if (d.at(im, t) == 0 || abs(d.at(i, t)) < abs(d.at(im, t))) im = i;
        }
        if (d.at(im, t) == 0) break;  // column t is entirely zero
        if (im != t) {
          d.swap_rows(t, im);
          f.u.swap_rows(t, im);
        }
        bool dirty = false;
        for (std::size_t i = t + 1; i < d.rows(); ++i) {
          if (d.at(i, t) == 0) continue;
          const Int q = nearest_quotient(d.at(i, t), d.at(t, t));
          d.add_row_multiple(i, t, -q);
          f.u.add_row_multiple(i, t, -q);
          dirty = dirty || d.at(i, t) != 0;
        }
        if (!dirty) break;
      }
      // Row gcd phase, mirrored with column operations.
      for (;;) {
        std::size_t jm = t;
        for (std::size_t j = t; j < d.cols(); ++j) {
          if (d.at(t, j) == 0) continue;
          if (d.at(t, jm) == 0 || abs(d.at(t, j)) < abs(d.at(t, jm))) jm = j;
        }
        if (d.at(t, jm) == 0) break;
        if (jm != t) {
          d.swap_cols(t, jm);
          f.v.swap_cols(t, jm);
        }
        bool dirty = false;
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
          if (d.at(t, j) == 0) continue;
          const Int q = nearest_quotient(d.at(t, j), d.at(t, t));
          d.add_col_multiple(j, t, -q);
          f.v.add_col_multiple(j, t, -q);
          dirty = dirty || d.at(t, j) != 0;
        }
        if (!dirty) break;
      }

      // A column swap in the row phase can drag nonzero entries back into
      // column t; every such round strictly shrinks |pivot|, so this loop
      // runs at most log2(initial pivot) more times.
      bool col_clear = true;
      for (std::size_t i = t + 1; i < d.rows() && col_clear; ++i)
        col_clear = d.at(i, t) == 0;
      if (!col_clear) continue;

      if (d.at(t, t) == 0) {
        // Row and column t are zero but the interior may not be; pull the
        // smallest remaining entry into the pivot seat and start over.
        const auto pivot = min_nonzero(d, t);
        if (!pivot) break;
        d.swap_rows(t, pivot->first);
        f.u.swap_rows(t, pivot->first);
        d.swap_cols(t, pivot->second);
        f.v.swap_cols(t, pivot->second);
        continue;
      }

      // Enforce that the pivot divides the whole remaining block, otherwise
      // fold the offending row in and retry; the retry leaves a remainder in
      // row t, shrinking the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < d.cols() && divides; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            f.u.add_row_multiple(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }

    if (d.at(t, t) == 0) break;
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      f.u.negate_row(t);
    }
  }
  return f;
}

std::size_t rank(const IntMatrix& a) {
  const IntMatrix d = smith_normal_form(a).d;
  std::size_t r = 0;
  const std::size_t k = std::min(d.rows(), d.cols());
  while (r < k && d.at(r, r) != 0) ++r;
  return r;
}

}  // namespace glr
