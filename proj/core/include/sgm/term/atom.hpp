#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgm/algebra/graded_module.hpp"
#include "sgm/chain/chain_complex.hpp"

namespace sgm {

/// Connectivity value of a space whose reduced homology vanishes everywhere.
inline constexpr int kInfiniteConnectivity = 1 << 20;

/// A closed connected manifold type used as a building block. All metadata
/// beyond the homology is carried as given; nothing here is decided.
struct AtomType {
    std::string name;
    int dim = 0;
    bool is_manifold = true;
    bool closed = true;
    bool connected = true;
    bool simply_connected = true;
    int connectivity = 0;
    bool orientable = true;
    bool homotopy_sphere = false;
    bool standard_sphere = false;
    std::optional<bool> spin;
    std::optional<std::int64_t> signature;
    GradedModule homology{Coefficients::integers()};  // integral

    friend bool operator==(const AtomType& a, const AtomType& b) { return a.name == b.name; }
};

/// First violated AtomType invariant, or nothing.
std::optional<std::string> validate_atom(const AtomType& a);

/// The standard sphere S^d; S^0 is the one-point space.
AtomType sphere_atom(int d);

/// Named atoms. The built-in table holds S0..S9 (S0 is also `pt`), S2xS2,
/// S2xS2#S2xS2, CP2, CP2#CP2bar, the dim-5 atoms S2xS3, S2xtS3 and Wu, and S1xS2.
class AtomTable {
  public:
    static AtomTable builtin();

    /// Rejects atoms failing `validate_atom`; replaces an existing name.
    void add(const AtomType& a);
    void add_alias(const std::string& alias, const std::string& target);
    std::optional<AtomType> find(const std::string& name) const;
    /// Looks up `S<d>`, synthesizing standard spheres up to the degree cap.
    AtomType sphere(int d) const;
    std::vector<std::string> names() const;

  private:
    std::map<std::string, AtomType> atoms_;
    std::map<std::string, std::string> aliases_;
};

/// Cellular chain model of an atom: the chosen sphere model for homotopy
/// spheres, otherwise the minimal complex realizing the stored homology
/// (one cycle per free generator, one cell pair per invariant factor).
ChainComplex atom_chain_model(const AtomType& a, SphereModel model = SphereModel::minimal);

}  // namespace sgm
