#ifndef CUTTREES_NORMAL_FORMS_HPP
#define CUTTREES_NORMAL_FORMS_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cuttrees/group_table.hpp"

namespace cuttrees {

enum class Factor { H, J };

// One letter of a group word: an element of a factor group, or a power of
// the stable letter in the HNN case.
struct Letter {
  enum class Kind { FactorH, FactorJ, Stable };
  Kind kind = Kind::FactorH;
  ElementIndex elem = 0;  // FactorH / FactorJ
  int eps = 0;            // Stable: +1 or -1
};

using GroupWord = std::vector<Letter>;

// Normal form (x0, x1, ..., xn, a) of an amalgamated product: the xi are
// non-identity coset representatives alternating between the two factors,
// and the tail a lies in the amalgamated subgroup (stored as an element
// of H).
struct AmalgamNormalForm {
  struct Syllable {
    Factor factor;
    ElementIndex rep;
  };
  std::vector<Syllable> syllables;
  ElementIndex tail = 0;

  bool operator==(const AmalgamNormalForm& o) const {
    if (tail != o.tail || syllables.size() != o.syllables.size()) return false;
    for (std::size_t i = 0; i < syllables.size(); ++i)
      if (syllables[i].factor != o.syllables[i].factor ||
          syllables[i].rep != o.syllables[i].rep)
        return false;
    return true;
  }
};

// Normal form (x0, t^e0, ..., xn, t^en, h) of an HNN extension. A syllable
// holds the coset representative that precedes its t-power: a representative
// of a coset of B when eps = +1, of A when eps = -1. The tail h is an
// arbitrary element of the base group.
struct HnnNormalForm {
  struct Syllable {
    ElementIndex rep;
    int eps;
  };
  std::vector<Syllable> syllables;
  ElementIndex tail = 0;

  bool operator==(const HnnNormalForm& o) const {
    if (tail != o.tail || syllables.size() != o.syllables.size()) return false;
    for (std::size_t i = 0; i < syllables.size(); ++i)
      if (syllables[i].rep != o.syllables[i].rep || syllables[i].eps != o.syllables[i].eps)
        return false;
    return true;
  }
};

using NormalForm = std::variant<AmalgamNormalForm, HnnNormalForm>;

// A finite-group amalgam H *_A J or HNN extension H *^A with the rewriting
// action that folds group words into their unique normal forms. Immutable
// after construction; every operation is a pure function.
class Presentation {
 public:
  enum class Kind { Amalgam, Hnn };

  struct AmalgamData {
    FiniteGroupTable H;
    FiniteGroupTable J;
    SubgroupEmbedding A;  // in H
    SubgroupEmbedding B;  // in J
    std::vector<ElementIndex> phi;      // H index -> J index, defined on A
    std::vector<ElementIndex> phi_inv;  // J index -> H index, defined on B
  };
  struct HnnData {
    FiniteGroupTable H;
    SubgroupEmbedding A;
    SubgroupEmbedding B;
    std::vector<ElementIndex> phi;      // defined on A, image B
    std::vector<ElementIndex> phi_inv;  // defined on B, image A
    std::string stable_token;
  };

  static Presentation from_json(const std::string& text);
  static Presentation load(const std::string& path);

  Kind kind() const { return kind_; }
  const AmalgamData& amalgam() const { return *amalgam_; }
  const HnnData& hnn() const { return *hnn_; }
  // Generator words as declared in the presentation file.
  const std::vector<GroupWord>& generators() const { return generators_; }

  NormalForm identity_form() const;
  bool is_identity(const NormalForm& nf) const;

  // The right action of a single letter, the four-case rewriting step.
  NormalForm act(const NormalForm& nf, const Letter& l) const;
  NormalForm normalize(const GroupWord& w) const;

  NormalForm multiply(const NormalForm& a, const NormalForm& b) const;
  NormalForm inverse(const NormalForm& a) const;

  GroupWord letters_of(const NormalForm& nf) const;
  Letter inverse_letter(const Letter& l) const;

  Letter parse_letter(const std::string& token) const;
  GroupWord parse_word(const std::string& text) const;  // whitespace separated

  std::string encode(const NormalForm& nf) const;
  NormalForm decode(const std::string& token) const;

  // Checks the alternation / Britton conditions; throws InvariantViolation.
  void validate_form(const NormalForm& nf) const;

  // Cayley adjacency: images of nf under the generators and their inverses,
  // the vertex itself excluded.
  std::vector<std::string> neighbours(const std::string& nf_token) const;

 private:
  Presentation() = default;

  Kind kind_ = Kind::Amalgam;
  std::optional<AmalgamData> amalgam_;
  std::optional<HnnData> hnn_;
  std::vector<GroupWord> generators_;
};

}  // namespace cuttrees

#endif
