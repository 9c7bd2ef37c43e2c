#include "symkin/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace symkin {

namespace {

using Json = nlohmann::ordered_json;

Json vec_json(const Vec2& v) { return Json::array({v.x, v.y}); }

// -0 prints as "-0.0"; results that cancel to zero should read as 0.
void clear_negative_zero(Json& j) {
  if (j.is_number_float()) {
    if (j.get<double>() == 0.0) j = 0.0;
    return;
  }
  if (j.is_structured()) {
    for (auto& child : j) clear_negative_zero(child);
  }
}

template <class T, class F>
void put(Json& obj, const std::string& key, const Outcome<T>& value, F&& convert) {
  if (value) {
    obj[key] = convert(*value);
  } else {
    obj[key] = nullptr;
    obj[key + "_reason"] = std::string(reason_code(value.reason()));
  }
}

void put(Json& obj, const std::string& key, const Outcome<Vec2>& value) {
  put(obj, key, value, vec_json);
}

Json locus_json(const Locus& locus) {
  struct Visitor {
    Json operator()(const CircleThroughPole& c) const {
      return {{"kind", "circle"}, {"diameter", vec_json(c.diameter)}};
    }
    Json operator()(const LineThroughPole& l) const {
      return {{"kind", "line"}, {"direction", vec_json(l.direction)}};
    }
    Json operator()(const PointOnly&) const { return {{"kind", "point"}}; }
    Json operator()(const Degenerate&) const { return {{"kind", "degenerate"}}; }
  };
  return std::visit(Visitor{}, locus);
}

Json bresse_json(const std::vector<BresseSet>& sets) {
  Json arr = Json::array();
  for (const BresseSet& s : sets) {
    arr.push_back({{"k", s.k},
                   {"pole_derivative", vec_json(s.pole_derivative)},
                   {"omega_r", s.omega_r},
                   {"omega_t", s.omega_t},
                   {"zero_normal", locus_json(s.zero_normal)},
                   {"zero_tangential", locus_json(s.zero_tangential)}});
  }
  return arr;
}

Json bottema_json(const BottemaInvariants& b) {
  Json higher = Json::array();
  int k = 4;
  for (const auto& [a, bk] : b.higher) higher.push_back({{"k", k++}, {"a", a}, {"b", bk}});
  return {{"b2", b.b2}, {"a3", b.a3}, {"b3", b.b3}, {"higher", higher}};
}

class CsvRow {
 public:
  void number(double v) { cell(format_number(v)); }
  void empty() { cell(""); }
  void vec(const std::string& field, const Outcome<Vec2>& v) {
    if (v) {
      number(v->x);
      number(v->y);
    } else {
      empty();
      empty();
      note(field, v.reason());
    }
  }
  void scalar(const std::string& field, const Outcome<double>& v) {
    if (v) {
      number(*v);
    } else {
      empty();
      note(field, v.reason());
    }
  }
  std::string finish() {
    cell(reasons_);
    return line_ + "\r\n";
  }

 private:
  void cell(const std::string& s) {
    if (!first_) line_ += ',';
    first_ = false;
    line_ += s;
  }
  void note(const std::string& field, Reason r) {
    if (!reasons_.empty()) reasons_ += ';';
    reasons_ += field + ":" + std::string(reason_code(r));
  }

  std::string line_;
  std::string reasons_;
  bool first_ = true;
};

struct Bounds {
  double min_x = INFINITY, min_y = INFINITY, max_x = -INFINITY, max_y = -INFINITY;

  void add(const Vec2& p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  void add_circle(const Vec2& c, double r) {
    add({c.x - r, c.y - r});
    add({c.x + r, c.y + r});
  }
  bool empty() const { return !(min_x <= max_x); }
};

std::string points_attr(const std::vector<Vec2>& pts) {
  std::string s;
  for (const Vec2& p : pts) {
    if (!s.empty()) s += ' ';
    s += format_number(p.x) + "," + format_number(p.y);
  }
  return s;
}

// Consecutive defined samples become one polyline each.
std::vector<std::vector<Vec2>> segments(const std::vector<PolodeRow>& rows,
                                        Outcome<Vec2> PolodeRow::*field) {
  std::vector<std::vector<Vec2>> out;
  std::vector<Vec2> current;
  for (const PolodeRow& row : rows) {
    const Outcome<Vec2>& v = row.*field;
    if (v) {
      current.push_back(*v);
    } else if (!current.empty()) {
      out.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

struct Circle {
  Vec2 centre;
  double radius;
  std::string cls;
};

}  // namespace

std::string format_number(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v == 0.0 ? 0.0 : v);
  return std::string(buf, res.ptr);
}

std::string report_json(const KinematicReport& r) {
  Json j;
  j["name"] = r.name;
  j["at"] = r.at;
  j["order"] = r.order;
  j["theta"] = r.theta;
  put(j, "pole", r.pole);
  put(j, "pole_accel", r.pole_accel);
  put(j, "u", r.u);
  put(j, "inflection_pole", r.inflection_pole);
  put(j, "inflection_diameter", r.inflection_diameter, [](double d) { return Json(d); });
  put(j, "bresse", r.bresse, bresse_json);
  Json poles = Json::array();
  for (const auto& [k, p] : r.higher_poles) {
    Json entry{{"k", k}};
    put(entry, "position", p);
    poles.push_back(entry);
  }
  j["higher_poles"] = poles;
  put(j, "balls_point", r.balls_point);
  put(j, "bottema", r.bottema, bottema_json);
  put(j, "fixed_polode_radius", r.fixed_polode_radius);
  put(j, "moving_polode_radius", r.moving_polode_radius);
  clear_negative_zero(j);
  return j.dump(2) + "\n";
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = std::string(kSweepHeader) + "\r\n";
  for (const SweepRow& row : rows) {
    CsvRow line;
    line.number(row.param);
    line.vec("pole", row.pole);
    line.scalar("u_norm", row.u_norm);
    line.scalar("inflection_diameter", row.inflection_diameter);
    line.vec("p2", row.p2);
    line.vec("ball", row.ball);
    out += line.finish();
  }
  return out;
}

std::string polodes_csv(const std::vector<PolodeRow>& rows) {
  std::string out = std::string(kPolodesHeader) + "\r\n";
  for (const PolodeRow& row : rows) {
    CsvRow line;
    line.number(row.param);
    line.number(row.theta);
    line.vec("fixed", row.fixed);
    line.vec("moving", row.moving);
    line.vec("moving_in_fixed", row.moving_in_fixed);
    out += line.finish();
  }
  return out;
}

std::string polodes_svg(const std::vector<PolodeRow>& rows, const KinematicReport& at) {
  const auto fixed = segments(rows, &PolodeRow::fixed);
  const auto moving = segments(rows, &PolodeRow::moving_in_fixed);

  std::vector<Circle> inflection;
  std::vector<Circle> bresse;
  if (at.pole && at.inflection_pole) {
    const Vec2 d = *at.inflection_pole - *at.pole;
    if (norm(d) > 0.0) inflection.push_back({*at.pole + d / 2.0, norm(d) / 2.0, "k2 zero-normal"});
  }
  if (at.bresse) {
    for (const BresseSet& s : *at.bresse) {
      if (s.k > 3) break;
      if (const auto* c = std::get_if<CircleThroughPole>(&s.zero_normal); c && s.k > 2) {
        bresse.push_back({c->pole + c->diameter / 2.0, norm(c->diameter) / 2.0,
                          "k" + std::to_string(s.k) + " zero-normal"});
      }
      if (const auto* c = std::get_if<CircleThroughPole>(&s.zero_tangential)) {
        bresse.push_back({c->pole + c->diameter / 2.0, norm(c->diameter) / 2.0,
                          "k" + std::to_string(s.k) + " zero-tangential"});
      }
    }
  }

  Bounds b;
  for (const auto& seg : fixed) for (const Vec2& p : seg) b.add(p);
  for (const auto& seg : moving) for (const Vec2& p : seg) b.add(p);
  for (const auto& c : inflection) b.add_circle(c.centre, c.radius);
  for (const auto& c : bresse) b.add_circle(c.centre, c.radius);
  if (at.pole) b.add(*at.pole);
  if (at.balls_point) b.add(*at.balls_point);
  if (b.empty()) b.add({0.0, 0.0});
  double w = b.max_x - b.min_x;
  double h = b.max_y - b.min_y;
  double extent = std::max(w, h);
  if (!(extent > 0.0)) extent = 1.0;
  const double margin = 0.05 * extent;
  const double x0 = b.min_x - margin;
  const double y0 = b.min_y - margin;
  w += 2 * margin;
  h += 2 * margin;
  const std::string stroke = format_number(0.004 * extent);
  const std::string marker = format_number(0.012 * extent);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << format_number(x0)
      << ' ' << format_number(-(y0 + h)) << ' ' << format_number(w) << ' ' << format_number(h)
      << "\">\n";
  svg << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"" << stroke << "\">\n";

  const auto polylines = [&](const char* id, const char* colour, const auto& segs) {
    svg << "<g id=\"" << id << "\" stroke=\"" << colour << "\">\n";
    for (const auto& seg : segs) svg << "<polyline points=\"" << points_attr(seg) << "\"/>\n";
    svg << "</g>\n";
  };
  const auto circles = [&](const char* id, const char* colour, const std::vector<Circle>& cs) {
    svg << "<g id=\"" << id << "\" stroke=\"" << colour << "\">\n";
    for (const Circle& c : cs) {
      svg << "<circle class=\"" << c.cls << "\" cx=\"" << format_number(c.centre.x) << "\" cy=\""
          << format_number(c.centre.y) << "\" r=\"" << format_number(c.radius) << "\"/>\n";
    }
    svg << "</g>\n";
  };
  const auto point = [&](const char* id, const char* colour, const Outcome<Vec2>& p) {
    svg << "<g id=\"" << id << "\" fill=\"" << colour << "\" stroke=\"none\">\n";
    if (p) {
      svg << "<circle cx=\"" << format_number(p->x) << "\" cy=\"" << format_number(p->y) << "\" r=\""
          << marker << "\"/>\n";
    }
    svg << "</g>\n";
  };

  polylines("fixed-polode", "#1f5fa8", fixed);
  polylines("moving-polode", "#c0392b", moving);
  circles("inflection-circle", "#2e8b57", inflection);
  circles("bresse-circles", "#8e6c2f", bresse);
  point("pole", "#000000", at.pole);
  point("balls-point", "#7d3c98", at.balls_point);
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace symkin
