#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nearhex/veldkamp.hpp"

namespace nearhex {

using Perm6 = std::array<std::uint8_t, 6>;  // images of 0..5
using Perm3 = std::array<std::uint8_t, 3>;  // images of layers 0..2

// Automorphism (sigma6, sigma3) with its induced permutation of the 45
// points: (layer, {i,j}) -> (sigma3(layer), {sigma6(i), sigma6(j)}).
struct GroupElement {
  Perm6 sigma6{};
  Perm3 sigma3{};
  std::array<std::uint8_t, 45> point{};
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Conjugacy class of S6 x S3, keyed by a pair of cycle types.  Class
// representatives use consecutive cycles; display names label the layer
// factor with 7,8,9 (7 -> layer 0, 8 -> layer 1, 9 -> layer 2).
struct ConjClass {
  std::vector<int> cycle6;  // partition of 6, descending
  std::vector<int> cycle3;  // partition of 3, descending
  GroupElement rep;
  int size = 0;
  std::string name;
};

class AutomorphismGroup {
 public:
  static constexpr int kOrder = 4320;
  static constexpr int kClassCount = 33;

  explicit AutomorphismGroup(const NearHexagon& nh);

  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<ConjClass>& classes() const { return classes_; }

  GroupElement element(const Perm6& s6, const Perm3& s3) const;
  static GroupElement compose(const GroupElement& a, const GroupElement& b);

  // {(1 2), (1 2 3 4 5 6)} x {layer swap, layer 3-cycle}
  const std::array<GroupElement, 4>& generators() const { return generators_; }

  struct S6Class {
    std::vector<int> cycle;
    Perm6 rep;
    int size = 0;
    std::string name;
  };
  // The 11 classes of the GQ(2,2) automorphism group S6, same partition order.
  const std::vector<S6Class>& s6_classes() const { return s6_classes_; }

 private:
  const NearHexagon* nh_;
  std::vector<GroupElement> elements_;
  std::vector<ConjClass> classes_;
  std::vector<S6Class> s6_classes_;
  std::array<GroupElement, 4> generators_;
};

// Induced F2-linear action on hyperplane ids; image[0] == 0.
std::array<std::uint16_t, 1024> hyperplane_action(const VeldkampSpace& vs,
                                                  const GroupElement& g);
// Same at GQ(2,2) level for a plain S6 element.
std::array<std::uint8_t, 32> gq_action(const VeldkampSpace& vs, const Perm6& s6);

VLine act_on_line(const std::array<std::uint16_t, 1024>& act, VLine l);

// |G| / orbit size, computed by orbit closure under the generators.
long stabilizer_order(const VeldkampSpace& vs, const AutomorphismGroup& grp,
                      HypId h);

}  // namespace nearhex
