#include "cuttrees/group_action.hpp"

namespace cuttrees {

CayleyAction::CayleyAction(std::shared_ptr<const Presentation> pres,
                           const EndMarkedGraph* model)
    : pres_(std::move(pres)), model_(model) {}

std::string CayleyAction::identity() const {
  return pres_->encode(pres_->identity_form());
}

std::vector<std::string> CayleyAction::generator_elements() const {
  std::vector<std::string> out;
  for (const GroupWord& w : pres_->generators())
    out.push_back(pres_->encode(pres_->normalize(w)));
  return out;
}

std::optional<std::string> CayleyAction::apply(const std::string& g,
                                               const std::string& vertex) const {
  const auto v = model_->find_vertex(vertex);
  if (!v || model_->is_end_marker(*v)) return std::nullopt;
  const std::string image =
      pres_->encode(pres_->multiply(pres_->decode(g), pres_->decode(vertex)));
  const auto w = model_->find_vertex(image);
  if (!w || model_->is_end_marker(*w)) return std::nullopt;
  return image;
}

std::string CayleyAction::mul(const std::string& g, const std::string& h) const {
  return pres_->encode(pres_->multiply(pres_->decode(g), pres_->decode(h)));
}

std::string CayleyAction::inv(const std::string& g) const {
  return pres_->encode(pres_->inverse(pres_->decode(g)));
}

std::optional<std::string> LineShiftAction::apply(const std::string& g,
                                                  const std::string& vertex) const {
  const auto v = model_->find_vertex(vertex);
  if (!v || model_->is_end_marker(*v)) return std::nullopt;
  long pos;
  try {
    pos = std::stol(vertex);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  const std::string image = std::to_string(std::stol(g) + pos);
  const auto w = model_->find_vertex(image);
  if (!w || model_->is_end_marker(*w)) return std::nullopt;
  return image;
}

std::string LineShiftAction::mul(const std::string& g, const std::string& h) const {
  return std::to_string(std::stol(g) + std::stol(h));
}

std::string LineShiftAction::inv(const std::string& g) const {
  return std::to_string(-std::stol(g));
}

}  // namespace cuttrees
