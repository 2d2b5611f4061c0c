#pragma once

// Minimal RAII layer over MPFR. Every value carries its own precision, so
// independent evaluations never share global state.

#include <mpfr.h>

#include <gmpxx.h>

namespace newman::detail {

class Real {
 public:
  explicit Real(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  Real(mpfr_prec_t bits, long value) : Real(bits) { mpfr_set_si(v_, value, MPFR_RNDN); }
  Real(const Real& o) : Real(mpfr_get_prec(o.v_)) { mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real(Real&& o) noexcept : Real(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_prec_t bits() const noexcept { return mpfr_get_prec(v_); }

 private:
  mpfr_t v_;
};

struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t bits, long real_part = 0) : re(bits, real_part), im(bits, 0) {}

  // *this *= other.
  void mul(const Complex& other, Real& t1, Real& t2) {
    mpfr_mul(t1.get(), re.get(), other.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), im.get(), other.im.get(), MPFR_RNDN);
    mpfr_sub(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), re.get(), other.im.get(), MPFR_RNDN);
    mpfr_fma(im.get(), im.get(), other.re.get(), t2.get(), MPFR_RNDN);
    mpfr_set(re.get(), t1.get(), MPFR_RNDN);
  }

  void add(const Complex& other) {
    mpfr_add(re.get(), re.get(), other.re.get(), MPFR_RNDN);
    mpfr_add(im.get(), im.get(), other.im.get(), MPFR_RNDN);
  }
};

}  // namespace newman::detail
