#pragma once

// Generators for the concrete example Hopf algebras (group algebras with
// R = 1 (x) 1, Drinfeld doubles of small groups) and the hopfspec JSON
// interchange format.

#include "hopflab/hopf.hpp"

#include <optional>
#include <string>

namespace hopflab {

struct UnsupportedGroup : Error {
    using Error::Error;
};
/// A generated structure failed its own validators; signals a convention
/// error in the construction code, not bad user input.
struct ConstructionInvalid : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};

/// Finite group as a full multiplication table, with conjugacy classes and
/// centralizers precomputed. Construction validates the group axioms.
class GroupTable {
public:
    static GroupTable cyclic(size_t n);
    static GroupTable dihedral(size_t n);   // order 2n
    static GroupTable symmetric(size_t n);  // n <= 4
    /// Accepts "Z<n>" / "C<n>" (cyclic), "D<n>" (dihedral), "S<n>" (symmetric).
    static GroupTable parse(const std::string& spec);

    size_t order() const { return n_; }
    size_t mul(size_t a, size_t b) const { return table_[a * n_ + b]; }
    size_t inv(size_t a) const { return inv_[a]; }
    size_t identity() const { return id_; }

    const std::string& name() const { return name_; }
    const std::string& label(size_t i) const { return labels_[i]; }
    std::optional<size_t> index_of(const std::string& label) const;

    /// Conjugacy classes, each sorted, ordered by smallest member.
    const std::vector<std::vector<size_t>>& conjugacy_classes() const {
        return classes_;
    }
    std::vector<size_t> centralizer(size_t g) const;

private:
    GroupTable(std::string name, size_t n, std::vector<size_t> table,
               std::vector<std::string> labels);

    std::string name_;
    size_t n_ = 0;
    size_t id_ = 0;
    std::vector<size_t> table_;
    std::vector<size_t> inv_;
    std::vector<std::string> labels_;
    std::vector<std::vector<size_t>> classes_;
};

/// A Hopf algebra bundled with its quasi-triangular structure, basis labels
/// and provenance; the common currency of the builders, file format and CLI.
struct HopfObject {
    HopfAlgebraData H;
    std::optional<RMatrix> R;
    std::vector<std::string> basis_labels;
    std::string name;
    std::string provenance;
    std::vector<std::string> warnings;

    std::optional<size_t> basis_index(const std::string& label) const;
};

/// Group algebra kG with Delta(g) = g (x) g, S(g) = g^-1 and R = 1 (x) 1.
/// Warns (never errors) when char k divides |G|. Self-validates.
HopfObject group_algebra(const GroupTable& g, const Field& f);

/// Drinfeld double D(kG) on the basis delta_g >< x, g,x in G:
///   (delta_g >< x)(delta_h >< y) = [g = x h x^-1] delta_g >< xy
///   Delta(delta_g >< x)          = sum_{ab=g} (delta_a >< x) (x) (delta_b >< x)
///   eps(delta_g >< x)            = [g = e]
///   S(delta_g >< x)              = delta_{x^-1 g^-1 x} >< x^-1
///   R = sum_g (delta_g >< e) (x) (1 >< g)
/// The construction runs check_hopf, check_qt and is_factorizable and throws
/// ConstructionInvalid if any of them fails.
HopfObject drinfeld_double(const GroupTable& g, const Field& f);

/// Writes the canonical hopfspec JSON serialization (sorted keys, sparse
/// entries sorted lexicographically, scalars as canonical strings).
void write_hopfspec(const HopfObject& h, const std::string& path);
std::string hopfspec_to_string(const HopfObject& h);

/// Parses and validates a hopfspec file. Structural problems (bad indices,
/// unparsable scalars, missing keys) throw ParseError naming the entry;
/// axiom violations throw ValidationError with the axiom id and witness.
/// Validation can be skipped when the caller re-checks explicitly.
HopfObject read_hopfspec(const std::string& path, bool validate = true);
HopfObject hopfspec_from_string(const std::string& text, bool validate = true);

}  // namespace hopflab
