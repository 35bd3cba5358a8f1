#include <algorithm>
#include <charconv>
#include <map>

#include "meancx/error.hpp"
#include "meancx/systems.hpp"

namespace meancx {

namespace {

struct Address {
  std::string name;
  std::string positional;
  std::map<std::string, std::string, std::less<>> params;
};

Address parse_address(std::string_view text) {
  Address out;
  const auto colon = text.find(':');
  out.name = std::string(text.substr(0, colon));
  if (colon == std::string_view::npos) return out;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      if (!out.positional.empty() || !out.params.empty()) {
        throw UnknownNameError("unexpected parameter '" + std::string(item) + "' in '" + std::string(text) + "'");
      }
      out.positional = std::string(item);
    } else {
      out.params.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
    }
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

double parse_number(const std::string& key, const std::string& value) {
  if (value == "golden") return kGoldenAngle;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw UnknownNameError("parameter " + key + " has non-numeric value '" + value + "'");
  }
  return v;
}

class Params {
 public:
  Params(const Address& address, std::string_view text) : address_(address), text_(text) {}

  double number(const std::string& key, double fallback) {
    auto it = address_.params.find(key);
    if (it == address_.params.end()) return fallback;
    used_.push_back(key);
    return parse_number(key, it->second);
  }
  int integer(const std::string& key, int fallback) {
    const double v = number(key, fallback);
    if (v != static_cast<int>(v)) throw UnknownNameError("parameter " + key + " must be an integer");
    return static_cast<int>(v);
  }
  void finish() const {
    for (const auto& [k, v] : address_.params) {
      if (std::find(used_.begin(), used_.end(), k) == used_.end()) {
        throw UnknownNameError("unknown parameter '" + k + "' in '" + std::string(text_) + "'");
      }
    }
  }

 private:
  const Address& address_;
  std::string_view text_;
  std::vector<std::string> used_;
};

}  // namespace

SystemPtr make_system(std::string_view text) {
  if (text.starts_with("product:")) return product_lift(make_system(text.substr(8)));
  const Address address = parse_address(text);
  Params p(address, text);
  auto no_positional = [&] {
    if (!address.positional.empty()) {
      throw UnknownNameError("unexpected parameter '" + address.positional + "' in '" + std::string(text) + "'");
    }
  };
  SystemPtr out;
  if (address.name == "rotation") {
    no_positional();
    out = make_rotation(p.number("alpha", kGoldenAngle));
  } else if (address.name == "torus-rotation") {
    no_positional();
    const double a1 = p.number("alpha1", 0.4142135623730950488);
    out = make_torus_rotation(a1, p.number("alpha2", 0.7320508075688772935));
  } else if (address.name == "kronecker-flow") {
    no_positional();
    const double w1 = p.number("omega1", kGoldenAngle);
    out = make_kronecker_flow(w1, p.number("omega2", 0.4142135623730950488));
  } else if (address.name == "skew-product") {
    no_positional();
    out = make_skew_product(p.number("alpha", kGoldenAngle));
  } else if (address.name == "odometer") {
    no_positional();
    if (p.integer("W", 64) != 64) throw UnknownNameError("odometer supports W=64 only");
    out = make_odometer();
  } else if (address.name == "sturmian") {
    no_positional();
    const double alpha = p.number("alpha", kGoldenAngle);
    out = make_sturmian(alpha, p.integer("L", 12));
  } else if (address.name == "bernoulli-shift") {
    const GroupSpec group = GroupSpec::parse(address.positional.empty() ? "Z" : address.positional);
    out = make_bernoulli_shift(group, p.integer("L", default_truncation_radius(group)));
  } else {
    throw UnknownNameError("unknown system '" + std::string(text) + "'");
  }
  p.finish();
  return out;
}

std::vector<std::string> builtin_addresses() {
  return {"rotation",          "torus-rotation",        "kronecker-flow",          "odometer",
          "sturmian",          "skew-product",          "bernoulli-shift:Z",       "bernoulli-shift:Z^2",
          "bernoulli-shift:heis3", "bernoulli-shift:lamplighter"};
}

std::vector<SystemEntry> list_systems() {
  std::vector<SystemEntry> out;
  for (const auto& base : builtin_addresses()) {
    for (const auto& address : {base, "product:" + base}) {
      const auto system = make_system(address);
      out.push_back({address, system->group().name(), system->ground_truth(), system->isometric()});
    }
  }
  return out;
}

}  // namespace meancx
