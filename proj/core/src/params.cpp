#include "tricolor/params.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "tricolor/errors.hpp"

namespace tricolor {

std::int64_t floor_of(const Rational& q) {
  using boost::multiprecision::cpp_int;
  cpp_int num = boost::multiprecision::numerator(q);
  const cpp_int den = boost::multiprecision::denominator(q);
  cpp_int f = num / den;  // truncates toward zero
  if (num < 0 && f * den != num) f -= 1;
  return f.convert_to<std::int64_t>();
}

std::int64_t ceil_of(const Rational& q) { return -floor_of(-q); }

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(text));
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::int64_t den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return Rational(std::stoll(digits), den);
  } catch (const std::logic_error&) {
    throw Error("malformed rational '" + text + "'");
  }
}

std::string to_string(const Rational& q) {
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

int default_round_cap(std::size_t n) {
  if (n < 4) return 3;
  const int c = static_cast<int>(std::floor(std::log2(std::log2(static_cast<double>(n)))));
  return std::max(c, 3);
}

std::size_t degree_split(std::size_t n, double exponent) {
  if (n == 0) return 0;
  return static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(n), exponent)));
}

Params resolve(const Params& p, std::size_t n, std::size_t min_degree) {
  Params r = p;
  if (r.k <= 0) {
    const double d = static_cast<double>(std::max<std::size_t>(min_degree, 1));
    r.k = r.ck * std::sqrt(static_cast<double>(std::max<std::size_t>(n, 1)) / d);
  }
  if (r.k < 1) r.k = 1;
  if (r.nh == 0) {
    const double v = std::ceil(static_cast<double>(n) / (r.k * r.k));
    r.nh = v < 1 ? 1 : static_cast<std::size_t>(v);
  }
  if (r.round_cap <= 0) r.round_cap = default_round_cap(n);
  if (r.progress.c1 > r.progress.c2) {
    throw Error("params: type1 constant c1 must not exceed type2 factor c2");
  }
  return r;
}

namespace {

nlohmann::json rat(const Rational& q) { return to_string(q); }

Rational rat_from(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw Error("params: rational values must be strings like \"4/3\" or integers");
}

}  // namespace

void to_json(nlohmann::json& j, const Params& p) {
  j = nlohmann::json{
      {"k", p.k},
      {"ck", p.ck},
      {"nh", p.nh},
      {"round_cap", p.round_cap},
      {"type1_c1", p.progress.c1},
      {"type2_c2", p.progress.c2},
      {"highdeg_factor", rat(p.highdeg_factor)},
      {"sidecut_factor", rat(p.sidecut_factor)},
      {"term_factor", rat(p.term_factor)},
      {"bucket_base", rat(p.bucket_base)},
      {"delta_t_divisor", rat(p.delta_t_divisor)},
      {"delta_s_divisor", rat(p.delta_s_divisor)},
      {"degree_cap", rat(p.degree_cap)},
      {"root_retries", p.root_retries},
      {"side_cuts", p.side_cuts},
      {"strict_audit", p.strict_audit},
      {"small_graph", p.small_graph},
      {"split_exponent", p.split_exponent},
      {"certify_neighborhoods", p.certify_neighborhoods},
      {"seek_retry_shrink", p.seek_retry_shrink},
      {"oracle_cap", p.oracle_cap},
  };
}

void from_json(const nlohmann::json& j, Params& p) {
  if (!j.is_object()) throw Error("params: expected a JSON object");
  static const std::set<std::string> known{
      "k", "ck", "nh", "round_cap", "type1_c1", "type2_c2", "highdeg_factor",
      "sidecut_factor", "term_factor", "bucket_base", "delta_t_divisor", "delta_s_divisor",
      "degree_cap", "root_retries", "side_cuts", "strict_audit", "small_graph",
      "split_exponent", "certify_neighborhoods", "seek_retry_shrink", "oracle_cap"};
  for (const auto& [key, _] : j.items()) {
    if (!known.contains(key)) throw Error("params: unknown key '" + key + "'");
  }
  auto num = [&](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  auto q = [&](const char* key, Rational& field) {
    if (j.contains(key)) field = rat_from(j.at(key));
  };
  num("k", p.k);
  num("ck", p.ck);
  num("nh", p.nh);
  num("round_cap", p.round_cap);
  num("type1_c1", p.progress.c1);
  num("type2_c2", p.progress.c2);
  q("highdeg_factor", p.highdeg_factor);
  q("sidecut_factor", p.sidecut_factor);
  q("term_factor", p.term_factor);
  q("bucket_base", p.bucket_base);
  q("delta_t_divisor", p.delta_t_divisor);
  q("delta_s_divisor", p.delta_s_divisor);
  q("degree_cap", p.degree_cap);
  num("root_retries", p.root_retries);
  num("side_cuts", p.side_cuts);
  num("strict_audit", p.strict_audit);
  num("small_graph", p.small_graph);
  num("split_exponent", p.split_exponent);
  num("certify_neighborhoods", p.certify_neighborhoods);
  num("seek_retry_shrink", p.seek_retry_shrink);
  num("oracle_cap", p.oracle_cap);
  if (p.bucket_base <= 1) throw Error("params: bucket_base must exceed 1");
  if (p.ck <= 0) throw Error("params: ck must be positive");
}

}  // namespace tricolor
