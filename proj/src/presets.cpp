#include "operadforge/presets.hpp"

#include <map>
#include <stdexcept>

#include "operadforge/gv_algebras.hpp"
#include "operadforge/parser.hpp"

namespace operadforge {

namespace {

const std::map<std::string, std::string>& catalog() {
  static const std::map<std::string, std::string> texts = {
      {"com", R"(operad com
gen m : comm;
rel m(m(a,b),c) - m(a,m(b,c));
)"},

      {"lie", R"(operad lie
gen br : anti;
rel br(a,br(b,c)) + br(b,br(c,a)) + br(c,br(a,b));
)"},

      {"ass", R"(operad ass
gen mu : nonsym;
rel mu(mu(a,b),c) - mu(a,mu(b,c));
)"},

      {"poisson", R"(operad poisson
gen m : comm;
gen br : anti;
rel m(m(a,b),c) - m(a,m(b,c));
rel br(a,br(b,c)) + br(b,br(c,a)) + br(c,br(a,b));
rel br(m(a,b),c) - m(a,br(b,c)) - m(br(a,c),b);
)"},

      {"lie2", R"(operad lie2
gen lb : anti;
gen sb : anti;
rel sb(a,sb(b,c)) + sb(b,sb(c,a)) + sb(c,sb(a,b));
rel lb(a,lb(b,c)) + lb(b,lb(c,a)) + lb(c,lb(a,b));
rel sb(a,lb(b,c)) + sb(b,lb(c,a)) + sb(c,lb(a,b)) + lb(a,sb(b,c)) + lb(b,sb(c,a)) + lb(c,sb(a,b));
)"},

      {"ass2", R"(operad ass2
gen st : nonsym;
gen br : anti;
rel st(st(a,b),c) - st(a,st(b,c));
rel br(a,br(b,c)) + br(b,br(c,a)) + br(c,br(a,b));
rel br(a,st(b,c)) + br(a,st(c,b)) - st(br(a,b),c) - st(b,br(a,c)) - st(br(a,c),b) - st(c,br(a,b));
rel br(a,st(b,c)) - br(a,st(c,b)) + br(b,st(c,a)) - br(b,st(a,c)) + br(c,st(a,b)) - br(c,st(b,a)) + st(a,br(b,c)) - st(br(b,c),a) + st(b,br(c,a)) - st(br(c,a),b) + st(c,br(a,b)) - st(br(a,b),c);
)"},

      {"ll", R"(operad ll params (h)
gen m : comm;
gen br : anti;
rel br(m(a,b),c) - m(a,br(b,c)) - m(br(a,c),b);
rel br(a,br(b,c)) + br(b,br(c,a)) + br(c,br(a,b));
rel m(m(a,b),c) - m(a,m(b,c)) - h*h*br(b,br(a,c));
)"},

      {"ll2", R"(operad ll2 params (h1, h2)
gen m : comm;
gen lb : anti;
gen sb : anti;
rel lb(m(a,b),c) - m(a,lb(b,c)) - m(lb(a,c),b);
rel sb(m(a,b),c) - m(a,sb(b,c)) - m(sb(a,c),b);
rel sb(a,sb(b,c)) + sb(b,sb(c,a)) + sb(c,sb(a,b));
rel lb(a,lb(b,c)) + lb(b,lb(c,a)) + lb(c,lb(a,b));
rel sb(a,lb(b,c)) + sb(b,lb(c,a)) + sb(c,lb(a,b)) + lb(a,sb(b,c)) + lb(b,sb(c,a)) + lb(c,sb(a,b));
rel m(m(a,b),c) - m(a,m(b,c)) - h1*h1*lb(b,lb(a,c)) - h1*h2*lb(b,sb(a,c)) - h1*h2*sb(b,lb(a,c)) - h2*h2*sb(b,sb(a,c));
)"},

      {"ll2dual", R"(operad ll2dual params (h1, h2)
gen s : anti;
gen st1 : comm;
gen st2 : comm;
rel s(st1(a,b),c) - st1(a,s(b,c)) - st1(s(a,c),b);
rel s(st2(a,b),c) - st2(a,s(b,c)) - st2(s(a,c),b);
rel s(a,s(b,c)) + s(b,s(c,a)) + s(c,s(a,b));
rel st1(st1(a,b),c) - st1(a,st1(b,c)) - h1*h1*s(b,s(a,c));
rel st2(st1(a,b),c) - st1(a,st2(b,c)) - h1*h2*s(b,s(a,c));
rel st1(st2(a,b),c) - st2(a,st1(b,c)) - h2*h1*s(b,s(a,c));
rel st2(st2(a,b),c) - st2(a,st2(b,c)) - h2*h2*s(b,s(a,c));
rel st2(st1(a,b),c) - st1(st2(a,b),c);
)"},
  };
  return texts;
}

}  // namespace

std::vector<std::string> operad_preset_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : catalog()) names.push_back(k);
  return names;
}

std::vector<std::string> algebra_preset_names() { return {"gv", "gv2", "gv2alt"}; }

bool is_operad_preset(const std::string& name) { return catalog().count(name) > 0; }

bool is_algebra_preset(const std::string& name) {
  return name == "gv" || name == "gv2" || name == "gv2alt";
}

const std::string& operad_preset_text(const std::string& name) {
  auto it = catalog().find(name);
  if (it == catalog().end()) throw std::invalid_argument("unknown operad preset: " + name);
  return it->second;
}

std::string algebra_preset_text(const std::string& name, int n) {
  if (name == "gv") return gv_preset_text(n);
  if (name == "gv2") return gv2_preset_text(n);
  if (name == "gv2alt") return gv2alt_preset_text(n);
  throw std::invalid_argument("unknown algebra preset: " + name);
}

OperadPresentation operad_preset(const std::string& name) {
  return parse_operad_presentation(operad_preset_text(name));
}

AlgebraPresentation algebra_preset(const std::string& name, int n) {
  return parse_algebra_presentation(algebra_preset_text(name, n));
}

}  // namespace operadforge
