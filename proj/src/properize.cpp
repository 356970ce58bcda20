#include "subst/properize.hpp"

#include "subst/error.hpp"
#include "subst/matrix.hpp"

namespace subst {

PreLeftProperization pre_left_properize(const Substitution& phi, std::size_t budget) {
  if (!is_primitive(phi).primitive) throw Refused("properization needs a primitive substitution");
  if (!is_recognizable(phi)) throw Refused("substitution is periodic");
  PreLeftProperization out;
  out.returns = return_words(phi, find_fixed_letter(phi), budget);
  if (out.returns.words.empty()) throw Refused("no return words: the substitution does not grow");
  if (out.returns.words.size() > kMaxLetters) throw BudgetExceeded("too many return words");
  const Substitution psi = power(phi, out.returns.fixed.order, budget);
  std::vector<Word> images;
  for (const Word& v : out.returns.words) {
    Word image;
    for (std::size_t label : factor_return_words(out.returns, apply(psi, v, budget)))
      image.push_back(static_cast<Letter>(label));
    images.push_back(std::move(image));
  }
  out.eta = Substitution(std::move(images));
  return out;
}

LeftProperization left_properize(const Substitution& eta, int cap, std::size_t budget) {
  Substitution p = eta;
  for (int n = 1; n <= cap; ++n) {
    if (is_left_proper(p)) return {n, p};
    p = compose(eta, p, budget);
  }
  throw BudgetExceeded("no left-proper power up to " + std::to_string(cap));
}

Substitution right_conjugate(const Substitution& phi) {
  if (!is_left_proper(phi)) throw ContractViolation("right conjugate needs a left-proper substitution");
  std::vector<Word> images;
  for (const Word& w : phi.images()) {
    Word r(w.begin() + 1, w.end());
    r.push_back(w.front());
    images.push_back(std::move(r));
  }
  return Substitution(std::move(images));
}

Properization full_properize(const Substitution& phi, int cap, std::size_t budget) {
  Properization out;
  out.pre = pre_left_properize(phi, budget);
  out.left = left_properize(out.pre.eta, cap, budget);
  out.right = right_conjugate(out.left.power);
  out.full = compose(out.left.power, out.right, budget);
  if (!is_proper(out.full)) throw ContractViolation("properization is not fully proper");
  return out;
}

std::string render_return_alphabet(const ReturnWords& r) {
  std::string s;
  for (std::size_t i = 0; i < r.words.size(); ++i) {
    if (i) s += ",";
    s += "[" + to_string(r.words[i]) + "]";
  }
  return s;
}

}  // namespace subst
