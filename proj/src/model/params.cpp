#include "isingpair/model/params.hpp"

#include <stdexcept>

namespace isingpair {

bool lambda_in_bounds(const Rational& lambda) {
  if (lambda == Rational(1)) return true;
  return lambda.sign() >= 0 && lambda <= Rational(1, 3);
}

ParamRecord ParamRecord::make(const Rational& lambda1, const Rational& lambda2) {
  if (!lambda_in_bounds(lambda1)) {
    throw std::invalid_argument("lambda1 = " + lambda1.str() + " lies outside [0, 1/3] and is not 1");
  }
  if (!lambda_in_bounds(lambda2)) {
    throw std::invalid_argument("lambda2 = " + lambda2.str() + " lies outside [0, 1/3] and is not 1");
  }
  return ParamRecord{lambda1, lambda2};
}

ParamRecord ParamRecord::from_bracket(const Rational& ef, const Rational& e_etf) {
  return make(ef * Rational(4), e_etf * Rational(4));
}

}  // namespace isingpair
