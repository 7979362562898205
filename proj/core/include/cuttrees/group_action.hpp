#ifndef CUTTREES_GROUP_ACTION_HPP
#define CUTTREES_GROUP_ACTION_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cuttrees/graph.hpp"
#include "cuttrees/normal_forms.hpp"

namespace cuttrees {

// Partial left action of a group on the non-marker vertices of a finite
// model. Elements are canonical tokens; apply() returns nothing when the
// image falls off the model (a truncation artifact, counted by callers).
class GroupAction {
 public:
  virtual ~GroupAction() = default;

  virtual std::string identity() const = 0;
  // Canonical tokens of the acting generators (inverses not included).
  virtual std::vector<std::string> generator_elements() const = 0;
  virtual std::optional<std::string> apply(const std::string& g,
                                           const std::string& vertex) const = 0;
  virtual std::string mul(const std::string& g, const std::string& h) const = 0;
  virtual std::string inv(const std::string& g) const = 0;
};

// Left multiplication on a Cayley model: vertices are normal-form tokens,
// elements are the same tokens, so the action is free by construction.
class CayleyAction : public GroupAction {
 public:
  CayleyAction(std::shared_ptr<const Presentation> pres, const EndMarkedGraph* model);

  std::string identity() const override;
  std::vector<std::string> generator_elements() const override;
  std::optional<std::string> apply(const std::string& g,
                                   const std::string& vertex) const override;
  std::string mul(const std::string& g, const std::string& h) const override;
  std::string inv(const std::string& g) const override;

 private:
  std::shared_ptr<const Presentation> pres_;
  const EndMarkedGraph* model_;
};

// Integer shift action on the bundled line family; elements are decimal
// offsets.
class LineShiftAction : public GroupAction {
 public:
  explicit LineShiftAction(const EndMarkedGraph* model) : model_(model) {}

  std::string identity() const override { return "0"; }
  std::vector<std::string> generator_elements() const override { return {"1"}; }
  std::optional<std::string> apply(const std::string& g,
                                   const std::string& vertex) const override;
  std::string mul(const std::string& g, const std::string& h) const override;
  std::string inv(const std::string& g) const override;

 private:
  const EndMarkedGraph* model_;
};

}  // namespace cuttrees

#endif
