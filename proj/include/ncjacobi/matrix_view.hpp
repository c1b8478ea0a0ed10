#pragma once

#include <memory>
#include <string>

#include "ncjacobi/ncalg.hpp"

namespace ncjacobi {

enum class ViewFamily { Y, Ytilde, Toeplitz, QChar };

/// Supplies the entries of an infinite matrix and their inverses.
class EntrySource {
 public:
  virtual ~EntrySource() = default;
  virtual ViewFamily family() const = 0;
  virtual NCMonomial entry(int a, int b) const = 0;
  virtual NCMonomial inverse_entry(int a, int b) const { return entry(a, b).inverse(); }
  virtual std::string describe() const = 0;
};

/// Shifted and/or transposed view of a base matrix:
/// entry(a, b) = B(a + row_shift, b + col_shift), where B is the base or its
/// transpose.
class MatrixView {
 public:
  /// Generic Y_{a,b}.
  static MatrixView generic();
  /// Ytilde_{a,b}; with canonicalize = false entries keep Ytilde_{a,b} raw.
  static MatrixView tilde(bool canonicalize = true);
  static MatrixView from_source(std::shared_ptr<const EntrySource> source);

  NCMonomial entry(int a, int b) const;
  NCMonomial inverse_entry(int a, int b) const;
  /// entry(a, b) * inverse_entry(c, d).
  NCMonomial ratio(int a, int b, int c, int d) const;

  /// ^{[k]}V: entries V(a + k, b).
  MatrixView row_shifted(int k) const;
  /// V^{[k]}: entries V(a, b + k).
  MatrixView col_shifted(int k) const;
  /// V^T: entries V(b, a).
  MatrixView transposed() const;

  ViewFamily family() const { return source_->family(); }
  int row_shift() const { return row_shift_; }
  int col_shift() const { return col_shift_; }
  bool is_transposed() const { return transposed_; }
  std::string describe() const;

 private:
  explicit MatrixView(std::shared_ptr<const EntrySource> source) : source_(std::move(source)) {}
  std::pair<int, int> base_index(int a, int b) const;

  std::shared_ptr<const EntrySource> source_;
  int row_shift_ = 0;
  int col_shift_ = 0;
  bool transposed_ = false;
};

}  // namespace ncjacobi
