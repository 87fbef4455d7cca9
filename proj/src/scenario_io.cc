#include "igc/scenario_io.h"

#include <charconv>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace igc::cli {

using sim::Scenario;

bool parse_number(std::string_view text, double& value) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = first + text.size();
  for (const char* p = first; p != last; ++p) {
    const char c = *p;
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' ||
          c == '+' || c == 'e' || c == 'E')) {
      return false;
    }
  }
  if (*first == '+') ++first;
  const auto res = std::from_chars(first, last, value, std::chars_format::general);
  return res.ec == std::errc() && res.ptr == last && std::isfinite(value);
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Value conversion failure; the caller attaches line and field.
struct BadValue {
  std::string what;
};

double to_number(std::string_view v) {
  double d;
  if (!parse_number(trim(v), d)) {
    throw BadValue{"expected a decimal number, got '" + std::string(v) + "'"};
  }
  return d;
}

template <int N>
Eigen::Matrix<double, N, 1> to_vector(std::string_view v) {
  std::vector<std::string_view> items;
  std::size_t pos = 0;
  while (true) {
    const auto comma = v.find(',', pos);
    if (comma == std::string_view::npos) {
      items.push_back(v.substr(pos));
      break;
    }
    items.push_back(v.substr(pos, comma - pos));
    pos = comma + 1;
  }
  if (items.size() != static_cast<std::size_t>(N)) {
    throw BadValue{"expected " + std::to_string(N) +
                   " comma-separated numbers, got '" + std::string(v) + "'"};
  }
  Eigen::Matrix<double, N, 1> out;
  for (int i = 0; i < N; ++i) out(i) = to_number(items[i]);
  return out;
}

template <int N>
std::string from_vector(const Eigen::Matrix<double, N, 1>& v) {
  std::string s;
  for (int i = 0; i < N; ++i) {
    if (i) s += ", ";
    s += format_number(v(i));
  }
  return s;
}

bool to_bool(std::string_view v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw BadValue{"expected true or false, got '" + std::string(v) + "'"};
}

template <typename Enum>
using EnumNames = std::vector<std::pair<Enum, const char*>>;

template <typename Enum>
Enum to_enum(std::string_view v, const EnumNames<Enum>& names) {
  std::string options;
  for (const auto& [value, name] : names) {
    if (v == name) return value;
    options += options.empty() ? name : std::string("|") + name;
  }
  throw BadValue{"expected one of " + options + ", got '" + std::string(v) + "'"};
}

template <typename Enum>
std::string from_enum(Enum e, const EnumNames<Enum>& names) {
  for (const auto& [value, name] : names) {
    if (value == e) return name;
  }
  return "?";
}

const EnumNames<engagement::EvaderKind> kEvaderKinds = {
    {engagement::EvaderKind::kConstant, "constant"},
    {engagement::EvaderKind::kStep, "step"},
    {engagement::EvaderKind::kWeave, "weave"}};

const EnumNames<engagement::SignalKind> kSignalKinds = {
    {engagement::SignalKind::kZero, "zero"},
    {engagement::SignalKind::kConstant, "constant"},
    {engagement::SignalKind::kSinusoid, "sinusoid"}};

const EnumNames<airframe::AeroMode> kAeroModes = {
    {airframe::AeroMode::kTrig, "trig"}, {airframe::AeroMode::kLinear, "linear"}};

const EnumNames<sim::ControlHold> kHolds = {
    {sim::ControlHold::kZeroOrderHold, "zoh"},
    {sim::ControlHold::kContinuous, "continuous"}};

struct Field {
  std::string section;
  std::string key;
  bool required;
  std::function<void(Scenario&, std::string_view)> set;
  std::function<std::string(const Scenario&)> get;
};

template <typename Acc>
Field number(const char* section, const char* key, bool required, Acc acc) {
  return {section, key, required,
          [acc](Scenario& s, std::string_view v) { acc(s) = to_number(v); },
          [acc](const Scenario& s) { return format_number(acc(s)); }};
}

template <int N, typename Acc>
Field vector(const char* section, const char* key, bool required, Acc acc) {
  return {section, key, required,
          [acc](Scenario& s, std::string_view v) { acc(s) = to_vector<N>(v); },
          [acc](const Scenario& s) { return from_vector<N>(acc(s)); }};
}

template <typename Enum, typename Acc>
Field enumeration(const char* section, const char* key, Acc acc,
                  const EnumNames<Enum>& names) {
  return {section, key, false,
          [acc, &names](Scenario& s, std::string_view v) {
            acc(s) = to_enum(v, names);
          },
          [acc, &names](const Scenario& s) { return from_enum(acc(s), names); }};
}

template <int N, typename Acc>
void add_signal(std::vector<Field>& f, const char* prefix, Acc acc) {
  const std::string p = prefix;
  auto key = [&p](const char* suffix) {
    // Field names are kept alive in the static table below.
    static std::set<std::string> pool;
    return pool.insert(p + "_" + suffix).first->c_str();
  };
  f.push_back(enumeration(
      "disturbance", key("kind"),
      [acc](auto& s) -> auto& { return acc(s).kind; }, kSignalKinds));
  f.push_back(vector<N>("disturbance", key("amplitude"), false,
                        [acc](auto& s) -> auto& { return acc(s).amplitude; }));
  f.push_back(number("disturbance", key("frequency"), false,
                     [acc](auto& s) -> auto& { return acc(s).frequency; }));
  f.push_back(number("disturbance", key("phase"), false,
                     [acc](auto& s) -> auto& { return acc(s).phase; }));
}

#define IGC_FIELD(expr) [](auto& s) -> auto& { return expr; }

const std::vector<Field>& fields() {
  static const std::vector<Field> table = [] {
    std::vector<Field> f;
    const char* p = "pursuer";
    f.push_back(number(p, "mass", true, IGC_FIELD(s.cfg.mass)));
    f.push_back(number(p, "thrust", true, IGC_FIELD(s.cfg.thrust)));
    f.push_back(number(p, "speed", true, IGC_FIELD(s.cfg.speed)));
    f.push_back(number(p, "air_density", true, IGC_FIELD(s.cfg.air_density)));
    f.push_back(number(p, "ref_area", true, IGC_FIELD(s.cfg.ref_area)));
    f.push_back(number(p, "ref_length", true, IGC_FIELD(s.cfg.ref_length)));
    f.push_back(number(p, "lift_slope", true, IGC_FIELD(s.cfg.lift_slope)));
    f.push_back(number(p, "side_slope", true, IGC_FIELD(s.cfg.side_slope)));
    f.push_back(number(p, "mx_delta_x", true, IGC_FIELD(s.cfg.mx_delta_x)));
    f.push_back(number(p, "my_beta", true, IGC_FIELD(s.cfg.my_beta)));
    f.push_back(number(p, "my_delta_y", true, IGC_FIELD(s.cfg.my_delta_y)));
    f.push_back(number(p, "mz_alpha", true, IGC_FIELD(s.cfg.mz_alpha)));
    f.push_back(number(p, "mz_delta_z", true, IGC_FIELD(s.cfg.mz_delta_z)));
    f.push_back(number(p, "jx", true, IGC_FIELD(s.cfg.jx)));
    f.push_back(number(p, "jy", true, IGC_FIELD(s.cfg.jy)));
    f.push_back(number(p, "jz", true, IGC_FIELD(s.cfg.jz)));

    const char* i = "initial";
    f.push_back(number(i, "r", true, IGC_FIELD(s.initial.engagement.r)));
    f.push_back(number(i, "vr", true, IGC_FIELD(s.initial.engagement.vr)));
    f.push_back(number(i, "theta_l", true, IGC_FIELD(s.initial.engagement.theta_l)));
    f.push_back(number(i, "phi_l", true, IGC_FIELD(s.initial.engagement.phi_l)));
    f.push_back(number(i, "x01", true, IGC_FIELD(s.initial.engagement.x01)));
    f.push_back(number(i, "x02", true, IGC_FIELD(s.initial.engagement.x02)));
    f.push_back(number(i, "theta_v", true, IGC_FIELD(s.initial.engagement.theta_v)));
    f.push_back(number(i, "psi_v", true, IGC_FIELD(s.initial.engagement.psi_v)));
    f.push_back(number(i, "gamma", false, IGC_FIELD(s.initial.attitude.x1.x())));
    f.push_back(number(i, "alpha", false, IGC_FIELD(s.initial.attitude.x1.y())));
    f.push_back(number(i, "beta", false, IGC_FIELD(s.initial.attitude.x1.z())));
    f.push_back(number(i, "wx", false, IGC_FIELD(s.initial.attitude.x2.x())));
    f.push_back(number(i, "wy", false, IGC_FIELD(s.initial.attitude.x2.y())));
    f.push_back(number(i, "wz", false, IGC_FIELD(s.initial.attitude.x2.z())));
    f.push_back(number(i, "pitch", false, IGC_FIELD(s.initial.attitude.pitch)));
    f.push_back({i, "on_command_manifold", false,
                 [](Scenario& s, std::string_view v) {
                   s.on_command_manifold = to_bool(v);
                 },
                 [](const Scenario& s) {
                   return std::string(s.on_command_manifold ? "true" : "false");
                 }});

    const char* g = "gains";
    f.push_back(number(g, "k0", true, IGC_FIELD(s.gains.k0)));
    f.push_back(number(g, "k1", true, IGC_FIELD(s.gains.k1)));
    f.push_back(number(g, "k2", true, IGC_FIELD(s.gains.k2)));
    f.push_back(number(g, "delta0", true, IGC_FIELD(s.gains.delta0)));
    f.push_back(number(g, "delta1", true, IGC_FIELD(s.gains.delta1)));
    f.push_back(number(g, "delta2", true, IGC_FIELD(s.gains.delta2)));

    const char* e = "evader";
    f.push_back(enumeration(e, "kind", IGC_FIELD(s.evader.kind), kEvaderKinds));
    f.push_back(vector<3>(e, "amplitude", false, IGC_FIELD(s.evader.amplitude)));
    f.push_back(number(e, "frequency", false, IGC_FIELD(s.evader.frequency)));
    f.push_back(number(e, "phase", false, IGC_FIELD(s.evader.phase)));
    f.push_back(number(e, "step_time", false, IGC_FIELD(s.evader.step_time)));

    add_signal<2>(f, "force", IGC_FIELD(s.disturbances.force));
    add_signal<3>(f, "d1", IGC_FIELD(s.disturbances.d1));
    add_signal<3>(f, "d2", IGC_FIELD(s.disturbances.d2));

    const char* m = "sim";
    f.push_back(number(m, "dt", false, IGC_FIELD(s.dt)));
    f.push_back(number(m, "t_max", false, IGC_FIELD(s.t_max)));
    f.push_back(number(m, "r_intercept", false, IGC_FIELD(s.r_intercept)));
    f.push_back(number(m, "r_min", false, IGC_FIELD(s.r_min)));
    f.push_back(number(m, "r_max", false, IGC_FIELD(s.r_max)));
    f.push_back(enumeration(m, "plant_mode", IGC_FIELD(s.plant_mode), kAeroModes));
    f.push_back({m, "fin_limit", false,
                 [](Scenario& s, std::string_view v) {
                   if (v == "none") {
                     s.fin_limit.reset();
                   } else {
                     s.fin_limit = to_number(v);
                   }
                 },
                 [](const Scenario& s) {
                   return s.fin_limit ? format_number(*s.fin_limit)
                                      : std::string("none");
                 }});
    f.push_back(number(m, "divergence_factor", false,
                       IGC_FIELD(s.divergence_factor)));
    f.push_back(enumeration(m, "control_hold", IGC_FIELD(s.control_hold), kHolds));
    f.push_back(number(m, "guard_angle", false, IGC_FIELD(s.guard_angle)));
    f.push_back(number(m, "attitude_bound", false, IGC_FIELD(s.attitude_bound)));
    return f;
  }();
  return table;
}

#undef IGC_FIELD

const std::vector<std::string> kSections = {"pursuer", "initial",     "gains",
                                            "evader",  "disturbance", "sim"};

}  // namespace

sim::Scenario parse_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open scenario file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str(), path.string());
}

sim::Scenario parse_scenario_text(std::string_view text,
                                  const std::string& source) {
  std::map<std::pair<std::string, std::string>, const Field*> index;
  for (const auto& f : fields()) index[{f.section, f.key}] = &f;

  Scenario sc;
  std::set<std::pair<std::string, std::string>> seen;
  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ParseError(source, line_no, "malformed section header");
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      bool known = false;
      for (const auto& s : kSections) known = known || s == section;
      if (!known) {
        throw ParseError(source, line_no, "unknown section [" + section + "]");
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(source, line_no, "expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (section.empty()) {
      throw ParseError(source, line_no, "key '" + key + "' outside a section");
    }
    const auto it = index.find({section, key});
    if (it == index.end()) {
      throw UnknownKeyError(source, line_no, section, key);
    }
    if (!seen.insert({section, key}).second) {
      throw ParseError(source, line_no,
                       "duplicate key " + section + "." + key);
    }
    try {
      it->second->set(sc, value);
    } catch (const BadValue& bad) {
      throw ParseError(source, line_no, section + "." + key + ": " + bad.what);
    }
  }

  for (const auto& f : fields()) {
    if (f.required && !seen.count({f.section, f.key})) {
      throw ValidationError(f.section + "." + f.key, "missing required key");
    }
  }
  sc.validate();
  return sc;
}

std::string serialize_scenario(const sim::Scenario& sc) {
  std::string out;
  for (const auto& section : kSections) {
    out += "[" + section + "]\n";
    for (const auto& f : fields()) {
      if (f.section == section) out += f.key + " = " + f.get(sc) + "\n";
    }
    out += "\n";
  }
  return out;
}

}  // namespace igc::cli
