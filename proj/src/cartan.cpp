#include "crysalg/cartan.hpp"

#include <sstream>
#include <stdexcept>

namespace crysalg {

Weight operator+(const Weight& a, const Weight& b) {
  if (a.coords.size() != b.coords.size()) throw std::invalid_argument("Weight rank mismatch");
  Weight r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

std::string Weight::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ' ';
    os << coords[i];
  }
  return os.str();
}

CartanDatum CartanDatum::sl2() {
  CartanDatum c;
  c.index_set = {"1"};
  c.pairing = {{2}};
  return c;
}

Weight CartanDatum::simple_root(std::size_t j) const {
  Weight w;
  w.coords.resize(rank());
  for (std::size_t i = 0; i < rank(); ++i) w.coords[i] = pairing[i][j];
  return w;
}

std::vector<std::string> CartanDatum::validate() const {
  std::vector<std::string> issues;
  if (pairing.size() != rank()) {
    issues.push_back("pairing matrix has wrong number of rows");
    return issues;
  }
  for (std::size_t i = 0; i < rank(); ++i) {
    if (pairing[i].size() != rank()) {
      issues.push_back("pairing matrix row " + std::to_string(i) + " has wrong length");
      return issues;
    }
    for (std::size_t j = 0; j < rank(); ++j) {
      if (i == j && pairing[i][j] != 2)
        issues.push_back("diagonal entry (" + index_set[i] + "," + index_set[j] + ") is not 2");
      if (i != j && pairing[i][j] > 0)
        issues.push_back("off-diagonal entry (" + index_set[i] + "," + index_set[j] +
                         ") is positive");
    }
  }
  return issues;
}

int CartanDatum::color_index(const std::string& label) const {
  for (std::size_t i = 0; i < index_set.size(); ++i)
    if (index_set[i] == label) return static_cast<int>(i);
  return -1;
}

}  // namespace crysalg
