#include "catalan/mutants.hpp"

#include "catalan/errors.hpp"

namespace catalan::mutants {

TwoMotzkinPath upsilon_toggle_last(const TwoMotzkinPath& p) {
  std::string s = p.steps();
  const std::size_t i = s.find_last_of("SW");
  if (i == std::string::npos) throw DomainError("path has no level step: \"" + s + "\"");
  s[i] = s[i] == 'S' ? 'W' : 'S';
  return TwoMotzkinPath::from_trusted(std::move(s));
}

PlaneTree phi_skip_case2(const PlaneTree& t) {
  if (find_first_illegal(t).case_tag == IllegalCase::InternalFirstChild) return t;
  return phi(t);
}

LabelledTree psi_flip_pure(const LabelledTree& t) {
  const MatchSet f = decompose(t);
  std::vector<Match> ms = f.matches();
  for (auto& m : ms) {
    if (m.pure()) {
      m = m.flipped();
      return merge(MatchSet(std::move(ms)));
    }
  }
  return psi(t);
}

std::vector<std::string_view> names() { return {"upsilon-last", "phi-skip-case2", "psi-pure"}; }

std::optional<InvolutionMaps> maps_with(std::string_view name) {
  InvolutionMaps maps;
  if (name == "upsilon-last")
    maps.upsilon = upsilon_toggle_last;
  else if (name == "phi-skip-case2")
    maps.phi = phi_skip_case2;
  else if (name == "psi-pure")
    maps.psi = psi_flip_pure;
  else
    return std::nullopt;
  return maps;
}

}  // namespace catalan::mutants
