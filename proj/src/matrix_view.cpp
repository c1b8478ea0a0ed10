#include "ncjacobi/matrix_view.hpp"

namespace ncjacobi {

namespace {

class GenericSource final : public EntrySource {
 public:
  ViewFamily family() const override { return ViewFamily::Y; }
  NCMonomial entry(int a, int b) const override {
    return NCMonomial::generator(GeneratorId::y(a, b));
  }
  NCMonomial inverse_entry(int a, int b) const override {
    return NCMonomial::generator(GeneratorId::y(a, b), -1);
  }
  std::string describe() const override { return "Y"; }
};

class TildeSource final : public EntrySource {
 public:
  explicit TildeSource(bool canonicalize) : canonicalize_(canonicalize) {}
  ViewFamily family() const override { return ViewFamily::Ytilde; }
  NCMonomial entry(int a, int b) const override { return make(a, b, 1); }
  NCMonomial inverse_entry(int a, int b) const override { return make(a, b, -1); }
  std::string describe() const override { return canonicalize_ ? "Ytilde" : "Ytilde(raw)"; }

 private:
  NCMonomial make(int a, int b, int e) const {
    const auto g = GeneratorId::ytilde(a, b);
    return canonicalize_ ? NCMonomial::generator(g, e) : NCMonomial::raw(Scalar(1), {{g, e}}, 0);
  }
  bool canonicalize_;
};

}  // namespace

MatrixView MatrixView::generic() { return MatrixView(std::make_shared<GenericSource>()); }

MatrixView MatrixView::tilde(bool canonicalize) {
  return MatrixView(std::make_shared<TildeSource>(canonicalize));
}

MatrixView MatrixView::from_source(std::shared_ptr<const EntrySource> source) {
  return MatrixView(std::move(source));
}

std::pair<int, int> MatrixView::base_index(int a, int b) const {
  const int r = a + row_shift_, c = b + col_shift_;
  return transposed_ ? std::pair{c, r} : std::pair{r, c};
}

NCMonomial MatrixView::entry(int a, int b) const {
  const auto [r, c] = base_index(a, b);
  return source_->entry(r, c);
}

NCMonomial MatrixView::inverse_entry(int a, int b) const {
  const auto [r, c] = base_index(a, b);
  return source_->inverse_entry(r, c);
}

NCMonomial MatrixView::ratio(int a, int b, int c, int d) const {
  return mono_mul(entry(a, b), inverse_entry(c, d));
}

MatrixView MatrixView::row_shifted(int k) const {
  MatrixView v = *this;
  v.row_shift_ += k;
  return v;
}

MatrixView MatrixView::col_shifted(int k) const {
  MatrixView v = *this;
  v.col_shift_ += k;
  return v;
}

MatrixView MatrixView::transposed() const {
  MatrixView v = *this;
  v.transposed_ = !transposed_;
  std::swap(v.row_shift_, v.col_shift_);
  return v;
}

std::string MatrixView::describe() const {
  std::string s = source_->describe();
  if (transposed_) s += "^T";
  return s + "[row+" + std::to_string(row_shift_) + ",col+" + std::to_string(col_shift_) + "]";
}

}  // namespace ncjacobi
