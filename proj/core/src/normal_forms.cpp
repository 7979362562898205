#include "cuttrees/normal_forms.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cuttrees/errors.hpp"

namespace cuttrees {

namespace {

using nlohmann::ordered_json;

void check_token_shape(const std::string& t) {
  if (t.find('.') != std::string::npos || t.find(' ') != std::string::npos ||
      t.find('\t') != std::string::npos)
    throw InputError("element token may not contain '.' or whitespace: " + t);
}

FiniteGroupTable table_from_json(const ordered_json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains("elements") || !obj.contains("table"))
    throw InputError(std::string("group ") + name +
                     " needs \"elements\" and \"table\"");
  std::vector<std::string> elements;
  for (const auto& e : obj.at("elements")) {
    if (!e.is_string()) throw InputError("group element tokens must be strings");
    check_token_shape(e.get<std::string>());
    elements.push_back(e.get<std::string>());
  }
  std::vector<std::vector<std::string>> table;
  for (const auto& row : obj.at("table")) {
    std::vector<std::string> r;
    for (const auto& cell : row) {
      if (!cell.is_string()) throw InputError("multiplication table entries must be strings");
      r.push_back(cell.get<std::string>());
    }
    table.push_back(std::move(r));
  }
  return FiniteGroupTable(std::move(elements), std::move(table));
}

std::vector<std::string> token_list(const ordered_json& arr, const char* name) {
  if (!arr.is_array()) throw InputError(std::string(name) + " must be an array of tokens");
  std::vector<std::string> out;
  for (const auto& e : arr) {
    if (!e.is_string()) throw InputError(std::string(name) + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

// phi as a full-size index map over the domain parent, validated to be an
// isomorphism from the A-embedding onto the B-embedding.
std::pair<std::vector<ElementIndex>, std::vector<ElementIndex>> build_phi(
    const ordered_json& phi_obj, const FiniteGroupTable& domain_group,
    const SubgroupEmbedding& A, const FiniteGroupTable& range_group,
    const SubgroupEmbedding& B) {
  if (!phi_obj.is_object()) throw InputError("\"phi\" must map A tokens to B tokens");
  constexpr ElementIndex kUnset = static_cast<ElementIndex>(-1);
  std::vector<ElementIndex> phi(domain_group.order(), kUnset);
  std::vector<ElementIndex> phi_inv(range_group.order(), kUnset);
  for (auto it = phi_obj.begin(); it != phi_obj.end(); ++it) {
    const ElementIndex a = domain_group.element(it.key());
    if (!A.contains(a)) throw InputError("phi domain token not in A: " + it.key());
    const ElementIndex b = range_group.element(it.value().get<std::string>());
    if (!B.contains(b)) throw InputError("phi image token not in B: " + std::string(it.value()));
    if (phi[a] != kUnset) throw InputError("phi defined twice at " + it.key());
    if (phi_inv[b] != kUnset)
      throw InputError("phi is not injective at " + std::string(it.value()));
    phi[a] = b;
    phi_inv[b] = a;
  }
  for (ElementIndex a : A.members())
    if (phi[a] == kUnset)
      throw InputError("phi is not total on A, missing " + domain_group.token(a));
  if (A.subgroup_order() != B.subgroup_order())
    throw InputError("phi is not a bijection: |A| != |B|");
  for (ElementIndex a : A.members())
    for (ElementIndex b : A.members())
      if (phi[domain_group.mul(a, b)] != range_group.mul(phi[a], phi[b]))
        throw InputError("phi is not a homomorphism at (" + domain_group.token(a) + ", " +
                         domain_group.token(b) + ")");
  return {std::move(phi), std::move(phi_inv)};
}

void reject_unknown(const ordered_json& obj, std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) throw InputError("unknown key in presentation file: " + it.key());
  }
}

std::vector<std::string> split_ws(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_dots(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find('.', start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

Presentation Presentation::from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("presentation file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind"))
    throw InputError("presentation file needs a \"kind\"");
  const std::string kind = doc.at("kind").get<std::string>();

  Presentation p;
  if (kind == "amalgam") {
    reject_unknown(doc, {"kind", "H", "J", "A", "B", "phi", "generators"});
    FiniteGroupTable H = table_from_json(doc.at("H"), "H");
    FiniteGroupTable J = table_from_json(doc.at("J"), "J");
    for (std::size_t i = 0; i < J.order(); ++i) {
      const std::string& t = J.token(i);
      if (t != "1" && H.has_element(t))
        throw InputError("token used in both factors: " + t);
    }
    SubgroupEmbedding A(H, token_list(doc.at("A"), "A"));
    SubgroupEmbedding B(J, token_list(doc.at("B"), "B"));
    auto [phi, phi_inv] = build_phi(doc.at("phi"), H, A, J, B);
    p.kind_ = Kind::Amalgam;
    p.amalgam_.emplace(AmalgamData{std::move(H), std::move(J), std::move(A), std::move(B),
                                   std::move(phi), std::move(phi_inv)});
  } else if (kind == "hnn") {
    reject_unknown(doc, {"kind", "H", "A", "B", "phi", "generators", "stable_letter"});
    FiniteGroupTable H = table_from_json(doc.at("H"), "H");
    SubgroupEmbedding A(H, token_list(doc.at("A"), "A"));
    SubgroupEmbedding B(H, token_list(doc.at("B"), "B"));
    auto [phi, phi_inv] = build_phi(doc.at("phi"), H, A, H, B);
    std::string stable = doc.value("stable_letter", std::string("t"));
    check_token_shape(stable);
    if (H.has_element(stable))
      throw InputError("stable letter collides with an element of H: " + stable);
    p.kind_ = Kind::Hnn;
    p.hnn_.emplace(HnnData{std::move(H), std::move(A), std::move(B), std::move(phi),
                           std::move(phi_inv), std::move(stable)});
  } else {
    throw InputError("presentation kind must be \"amalgam\" or \"hnn\": " + kind);
  }

  if (!doc.contains("generators"))
    throw InputError("presentation file needs \"generators\"");
  for (const auto& gtext : token_list(doc.at("generators"), "generators")) {
    GroupWord w = p.parse_word(gtext);
    if (w.empty()) throw InputError("empty generator word");
    p.generators_.push_back(std::move(w));
  }
  if (p.generators_.empty()) throw InputError("presentation declares no generators");
  return p;
}

Presentation Presentation::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open presentation file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

NormalForm Presentation::identity_form() const {
  if (kind_ == Kind::Amalgam) {
    AmalgamNormalForm nf;
    nf.tail = amalgam_->H.identity();
    return nf;
  }
  HnnNormalForm nf;
  nf.tail = hnn_->H.identity();
  return nf;
}

bool Presentation::is_identity(const NormalForm& nf) const {
  if (kind_ == Kind::Amalgam) {
    const auto& f = std::get<AmalgamNormalForm>(nf);
    return f.syllables.empty() && f.tail == amalgam_->H.identity();
  }
  const auto& f = std::get<HnnNormalForm>(nf);
  return f.syllables.empty() && f.tail == hnn_->H.identity();
}

NormalForm Presentation::act(const NormalForm& nf, const Letter& l) const {
  if (kind_ == Kind::Amalgam) {
    const auto& D = *amalgam_;
    AmalgamNormalForm f = std::get<AmalgamNormalForm>(nf);
    if (l.kind == Letter::Kind::Stable)
      throw InputError("stable letter is not a letter of an amalgamated product");
    const bool in_h = (l.kind == Letter::Kind::FactorH);
    const FiniteGroupTable& G = in_h ? D.H : D.J;
    const SubgroupEmbedding& sub = in_h ? D.A : D.B;
    const Factor factor = in_h ? Factor::H : Factor::J;
    // Tail as an element of the acting factor: a itself in H, phi(a) in J.
    const ElementIndex a = in_h ? f.tail : D.phi[f.tail];
    auto store_tail = [&](ElementIndex rem) {
      f.tail = in_h ? rem : D.phi_inv[rem];
    };
    if (sub.contains(l.elem)) {
      store_tail(G.mul(a, l.elem));
      return f;
    }
    const ElementIndex ah = G.mul(a, l.elem);  // not in the subgroup
    if (!f.syllables.empty() && f.syllables.back().factor == factor) {
      const ElementIndex merged = G.mul(f.syllables.back().rep, ah);
      if (sub.contains(merged)) {
        f.syllables.pop_back();
        store_tail(merged);
      } else {
        auto dec = sub.coset_decompose(merged);
        f.syllables.back().rep = dec.rep;
        store_tail(dec.remainder);
      }
    } else {
      auto dec = sub.coset_decompose(ah);
      f.syllables.push_back({factor, dec.rep});
      store_tail(dec.remainder);
    }
    return f;
  }

  const auto& D = *hnn_;
  HnnNormalForm f = std::get<HnnNormalForm>(nf);
  if (l.kind == Letter::Kind::FactorJ)
    throw InputError("an HNN extension has no second factor");
  if (l.kind == Letter::Kind::FactorH) {
    f.tail = D.H.mul(f.tail, l.elem);
    return f;
  }
  // Right multiplication by t^eps. Push the tail through the stable letter:
  // h t = x t phi^{-1}(b) for h = x b with x representing a coset of B, and
  // h t^{-1} = x t^{-1} phi(a) for h = x a with x representing a coset of A.
  const SubgroupEmbedding& sub = (l.eps > 0) ? D.B : D.A;
  auto dec = sub.coset_decompose(f.tail);
  const bool pinch = dec.rep == D.H.identity() && !f.syllables.empty() &&
                     f.syllables.back().eps == -l.eps;
  if (pinch) {
    const ElementIndex conv = (l.eps > 0) ? D.phi_inv[f.tail] : D.phi[f.tail];
    const ElementIndex x_last = f.syllables.back().rep;
    f.syllables.pop_back();
    f.tail = D.H.mul(x_last, conv);
  } else {
    f.syllables.push_back({dec.rep, l.eps});
    f.tail = (l.eps > 0) ? D.phi_inv[dec.remainder] : D.phi[dec.remainder];
  }
  return f;
}

NormalForm Presentation::normalize(const GroupWord& w) const {
  NormalForm nf = identity_form();
  for (const Letter& l : w) nf = act(nf, l);
  return nf;
}

GroupWord Presentation::letters_of(const NormalForm& nf) const {
  GroupWord out;
  if (kind_ == Kind::Amalgam) {
    const auto& f = std::get<AmalgamNormalForm>(nf);
    for (const auto& s : f.syllables) {
      out.push_back(Letter{s.factor == Factor::H ? Letter::Kind::FactorH
                                                 : Letter::Kind::FactorJ,
                           s.rep, 0});
    }
    if (f.tail != amalgam_->H.identity() || out.empty())
      out.push_back(Letter{Letter::Kind::FactorH, f.tail, 0});
  } else {
    const auto& f = std::get<HnnNormalForm>(nf);
    for (const auto& s : f.syllables) {
      out.push_back(Letter{Letter::Kind::FactorH, s.rep, 0});
      out.push_back(Letter{Letter::Kind::Stable, 0, s.eps});
    }
    if (f.tail != hnn_->H.identity() || out.empty())
      out.push_back(Letter{Letter::Kind::FactorH, f.tail, 0});
  }
  return out;
}

Letter Presentation::inverse_letter(const Letter& l) const {
  Letter out = l;
  switch (l.kind) {
    case Letter::Kind::FactorH:
      out.elem = (kind_ == Kind::Amalgam ? amalgam_->H : hnn_->H).inv(l.elem);
      break;
    case Letter::Kind::FactorJ:
      out.elem = amalgam_->J.inv(l.elem);
      break;
    case Letter::Kind::Stable:
      out.eps = -l.eps;
      break;
  }
  return out;
}

NormalForm Presentation::multiply(const NormalForm& a, const NormalForm& b) const {
  NormalForm out = a;
  for (const Letter& l : letters_of(b)) out = act(out, l);
  return out;
}

NormalForm Presentation::inverse(const NormalForm& a) const {
  GroupWord w = letters_of(a);
  std::reverse(w.begin(), w.end());
  for (Letter& l : w) l = inverse_letter(l);
  return normalize(w);
}

Letter Presentation::parse_letter(const std::string& token) const {
  if (kind_ == Kind::Amalgam) {
    const auto& D = *amalgam_;
    if (D.H.has_element(token)) return Letter{Letter::Kind::FactorH, D.H.element(token), 0};
    if (D.J.has_element(token)) return Letter{Letter::Kind::FactorJ, D.J.element(token), 0};
    throw InputError("letter is not an element of either factor: " + token);
  }
  const auto& D = *hnn_;
  if (token == D.stable_token) return Letter{Letter::Kind::Stable, 0, +1};
  if (token == D.stable_token + "^-1") return Letter{Letter::Kind::Stable, 0, -1};
  if (D.H.has_element(token)) return Letter{Letter::Kind::FactorH, D.H.element(token), 0};
  throw InputError("letter is not an element of H or a stable-letter power: " + token);
}

GroupWord Presentation::parse_word(const std::string& text) const {
  GroupWord out;
  for (const auto& tok : split_ws(text)) out.push_back(parse_letter(tok));
  return out;
}

std::string Presentation::encode(const NormalForm& nf) const {
  std::string out;
  if (kind_ == Kind::Amalgam) {
    const auto& D = *amalgam_;
    const auto& f = std::get<AmalgamNormalForm>(nf);
    for (const auto& s : f.syllables) {
      out += (s.factor == Factor::H) ? D.H.token(s.rep) : D.J.token(s.rep);
      out += '.';
    }
    out += D.H.token(f.tail);
  } else {
    const auto& D = *hnn_;
    const auto& f = std::get<HnnNormalForm>(nf);
    for (const auto& s : f.syllables) {
      out += D.H.token(s.rep);
      out += '.';
      out += D.stable_token;
      if (s.eps < 0) out += "^-1";
      out += '.';
    }
    out += D.H.token(f.tail);
  }
  return out;
}

NormalForm Presentation::decode(const std::string& token) const {
  const auto parts = split_dots(token);
  if (kind_ == Kind::Amalgam) {
    const auto& D = *amalgam_;
    AmalgamNormalForm f;
    f.tail = D.H.element(parts.back());
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
      if (D.H.has_element(parts[i]) && parts[i] != "1")
        f.syllables.push_back({Factor::H, D.H.element(parts[i])});
      else
        f.syllables.push_back({Factor::J, D.J.element(parts[i])});
    }
    NormalForm nf = f;
    validate_form(nf);
    return nf;
  }
  const auto& D = *hnn_;
  HnnNormalForm f;
  if (parts.size() % 2 != 1)
    throw InputError("malformed HNN normal form token: " + token);
  for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
    int eps;
    if (parts[i + 1] == D.stable_token)
      eps = +1;
    else if (parts[i + 1] == D.stable_token + "^-1")
      eps = -1;
    else
      throw InputError("malformed HNN normal form token: " + token);
    f.syllables.push_back({D.H.element(parts[i]), eps});
  }
  f.tail = D.H.element(parts.back());
  NormalForm nf = f;
  validate_form(nf);
  return nf;
}

void Presentation::validate_form(const NormalForm& nf) const {
  if (kind_ == Kind::Amalgam) {
    const auto& D = *amalgam_;
    const auto& f = std::get<AmalgamNormalForm>(nf);
    for (std::size_t i = 0; i < f.syllables.size(); ++i) {
      const auto& s = f.syllables[i];
      const bool in_h = s.factor == Factor::H;
      const SubgroupEmbedding& sub = in_h ? D.A : D.B;
      const FiniteGroupTable& G = in_h ? D.H : D.J;
      if (s.rep == G.identity())
        throw InvariantViolation("normal form syllable is the identity");
      if (!sub.is_representative(s.rep))
        throw InvariantViolation("normal form syllable is not a coset representative: " +
                                 G.token(s.rep));
      if (i + 1 < f.syllables.size() && f.syllables[i + 1].factor == s.factor)
        throw InvariantViolation("consecutive syllables from the same factor");
    }
    if (!D.A.contains(f.tail))
      throw InvariantViolation("normal form tail is not in the amalgamated subgroup");
  } else {
    const auto& D = *hnn_;
    const auto& f = std::get<HnnNormalForm>(nf);
    for (std::size_t i = 0; i < f.syllables.size(); ++i) {
      const auto& s = f.syllables[i];
      if (s.eps != 1 && s.eps != -1)
        throw InvariantViolation("stable-letter exponent must be +-1");
      const SubgroupEmbedding& sub = (s.eps > 0) ? D.B : D.A;
      if (!sub.is_representative(s.rep))
        throw InvariantViolation("HNN syllable is not a coset representative: " +
                                 D.H.token(s.rep));
      if (i + 1 < f.syllables.size() && f.syllables[i + 1].rep == D.H.identity() &&
          f.syllables[i + 1].eps == -s.eps)
        throw InvariantViolation("forbidden subsequence t^e, 1, t^-e");
    }
    if (f.tail >= D.H.order()) throw InvariantViolation("HNN tail out of range");
  }
}

std::vector<std::string> Presentation::neighbours(const std::string& nf_token) const {
  const NormalForm nf = decode(nf_token);
  std::vector<std::string> out;
  for (const GroupWord& g : generators_) {
    NormalForm fwd = nf;
    for (const Letter& l : g) fwd = act(fwd, l);
    NormalForm bwd = nf;
    for (auto it = g.rbegin(); it != g.rend(); ++it) bwd = act(bwd, inverse_letter(*it));
    out.push_back(encode(fwd));
    out.push_back(encode(bwd));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.erase(std::remove(out.begin(), out.end(), nf_token), out.end());
  return out;
}

}  // namespace cuttrees
