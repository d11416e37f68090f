#include "cliffsig/signature.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliffsig {

namespace {
int g_max_dimension = 8;
}

int max_dimension() { return g_max_dimension; }

void set_max_dimension(int n) {
  if (n < 1 || n > kAbsoluteMaxDim) {
    throw std::invalid_argument("max dimension must be in [1, " +
                                std::to_string(kAbsoluteMaxDim) + "]");
  }
  g_max_dimension = n;
}

int Signature::count_plus() const {
  return static_cast<int>(std::count(squares.begin(), squares.end(), +1));
}

int Signature::count_minus() const {
  return static_cast<int>(std::count(squares.begin(), squares.end(), -1));
}

Signature make_signature(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1 || p + q > max_dimension()) {
    throw std::invalid_argument("signature dimension out of range: p=" +
                                std::to_string(p) + " q=" + std::to_string(q));
  }
  Signature sig;
  sig.squares.assign(static_cast<size_t>(p), +1);
  sig.squares.insert(sig.squares.end(), static_cast<size_t>(q), -1);
  return sig;
}

Signature signature_from_squares(std::vector<int> squares) {
  if (squares.empty() || static_cast<int>(squares.size()) > max_dimension()) {
    throw std::invalid_argument("signature dimension out of range");
  }
  for (int s : squares) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("signature entries must be +1 or -1");
    }
  }
  return Signature{std::move(squares)};
}

std::string squares_string(const std::vector<int>& squares) {
  std::string out = "(";
  for (int s : squares) out += (s > 0 ? '+' : '-');
  out += ")";
  return out;
}

std::string signature_name(const Signature& sig) {
  // Cl(p,q) when the pattern is canonical, the raw pattern otherwise.
  bool canonical = std::is_sorted(sig.squares.begin(), sig.squares.end(),
                                  [](int a, int b) { return a > b; });
  if (canonical) {
    return "Cl(" + std::to_string(sig.count_plus()) + "," +
           std::to_string(sig.count_minus()) + ")";
  }
  return "Cl" + squares_string(sig.squares);
}

}  // namespace cliffsig
