#include "invtheory/weylpol/rewriter.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "invtheory/polyring/text.hpp"
#include "invtheory/weylpol/polarization.hpp"

namespace invtheory {

std::string_view to_string(CertificateStep::Kind kind) {
  switch (kind) {
    case CertificateStep::Kind::polarize: return "polarize";
    case CertificateStep::Kind::permute_copies: return "permute_copies";
    case CertificateStep::Kind::scale: return "scale";
    case CertificateStep::Kind::combine: return "combine";
    case CertificateStep::Kind::recurse: return "recurse";
  }
  return "?";
}

LayoutPtr rewrite_layout(std::size_t l) { return make_layout(VariableLayout::copies_of(l, l + 1)); }

namespace {

CertificateStep::Kind kind_from_string(const std::string& s) {
  for (auto k : {CertificateStep::Kind::polarize, CertificateStep::Kind::permute_copies, CertificateStep::Kind::scale,
                 CertificateStep::Kind::combine, CertificateStep::Kind::recurse}) {
    if (to_string(k) == s) return k;
  }
  fail(ErrorKind::parse_error, "unknown certificate step '" + s + "'");
}

/// Builds the program bottom-up. A call build(A, R, w, rho) returns a register
/// holding rho . x^A, where the problem is restricted to rows R and copies
/// 0..w (|R| = w) and rho permutes coordinates. Row permutations are pushed
/// into the sources, since they commute with every step.
class Rewriter {
 public:
  Rewriter(std::uint32_t p, std::size_t l) : field_(p), l_(l) {}

  RewriteCertificate run(const ExponentMatrix& target) {
    std::vector<std::size_t> rows(l_);
    std::iota(rows.begin(), rows.end(), 0);
    std::vector<std::size_t> rho = rows;
    RewriteCertificate cert;
    cert.p = field_.modulus();
    cert.l = l_;
    cert.target = target;
    const std::size_t out = build(target, rows, l_, rho);
    cert.result = out;
    // registers were numbered in creation order: fix up to sources first
    std::vector<std::size_t> renumber(registers_.size());
    std::size_t next = 0;
    for (std::size_t r = 0; r < registers_.size(); ++r) {
      if (registers_[r].is_source) renumber[r] = next++;
    }
    for (std::size_t r = 0; r < registers_.size(); ++r) {
      if (!registers_[r].is_source) renumber[r] = next++;
    }
    for (const auto& reg : registers_) {
      if (reg.is_source) cert.sources.push_back(reg.source);
    }
    for (const auto& reg : registers_) {
      if (reg.is_source) continue;
      CertificateStep s = reg.step;
      s.arg = renumber[s.arg];
      for (auto& t : s.terms) t.second = renumber[t.second];
      cert.steps.push_back(std::move(s));
    }
    cert.result = renumber[out];
    return cert;
  }

 private:
  struct Register {
    bool is_source = false;
    ExponentMatrix source;
    CertificateStep step;
  };

  std::size_t add_step(CertificateStep s) {
    registers_.push_back({false, {}, std::move(s)});
    return registers_.size() - 1;
  }

  std::size_t add_source(const ExponentMatrix& a) {
    std::vector<std::uint32_t> key;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) key.push_back(a(i, j));
    }
    auto it = source_index_.find(key);
    if (it != source_index_.end()) return it->second;
    registers_.push_back({true, a, {}});
    source_index_.emplace(std::move(key), registers_.size() - 1);
    return registers_.size() - 1;
  }

  static ExponentMatrix permute_rows(const ExponentMatrix& a, const std::vector<std::size_t>& rho) {
    ExponentMatrix b(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) b(rho[i], j) = a(i, j);
    }
    return b;
  }

  [[noreturn]] void inversion_failure(const ExponentMatrix& a, const std::vector<std::size_t>& rows, std::size_t w,
                                      const std::string& why) {
    nlohmann::json dump{{"p", field_.modulus()}, {"l", l_}, {"matrix", a.to_rows()}, {"rows", rows}, {"window", w},
                        {"reason", why}};
    fail(ErrorKind::inversion_failure, "internal error in rewriter: " + dump.dump());
  }

  std::size_t build(const ExponentMatrix& a, const std::vector<std::size_t>& rows, std::size_t w,
                    const std::vector<std::size_t>& rho) {
    std::vector<std::uint32_t> key;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) key.push_back(a(i, j));
    }
    key.push_back(static_cast<std::uint32_t>(w));
    for (auto r : rows) key.push_back(static_cast<std::uint32_t>(r));
    for (auto r : rho) key.push_back(static_cast<std::uint32_t>(r));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (!active_.insert(key).second) inversion_failure(a, rows, w, "descent revisited a matrix");
    const std::size_t reg = build_uncached(a, rows, w, rho);
    active_.erase(key);
    memo_.emplace(std::move(key), reg);
    return reg;
  }

  std::size_t build_uncached(const ExponentMatrix& a, const std::vector<std::size_t>& rows, std::size_t w,
                             const std::vector<std::size_t>& rho) {
    if (a.column_sum(0) == 0) return add_source(permute_rows(a, rho));

    // sort copies 0..w by column sums within the window
    std::vector<std::uint32_t> csum(w + 1, 0);
    for (std::size_t j = 0; j <= w; ++j) {
      for (auto i : rows) csum[j] += a(i, j);
    }
    std::vector<std::size_t> order(w + 1);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return csum[x] < csum[y]; });
    if (!std::is_sorted(csum.begin(), csum.end())) {
      ExponentMatrix b = a;
      for (std::size_t q = 0; q <= w; ++q) {
        for (std::size_t i = 0; i < a.rows(); ++i) b(i, q) = a(i, order[q]);
      }
      const std::size_t inner = build(b, rows, w, rho);
      // x^A is x^B with copy q sent back to order[q]
      CertificateStep s;
      s.kind = CertificateStep::Kind::permute_copies;
      s.arg = inner;
      s.perm.resize(a.cols());
      std::iota(s.perm.begin(), s.perm.end(), 0);
      for (std::size_t q = 0; q <= w; ++q) s.perm[q] = order[q];
      return add_step(std::move(s));
    }

    // sort the window rows by row sums
    std::vector<std::uint32_t> rsum;
    for (auto i : rows) {
      std::uint32_t s = 0;
      for (std::size_t j = 0; j <= w; ++j) s += a(i, j);
      rsum.push_back(s);
    }
    if (!std::is_sorted(rsum.begin(), rsum.end())) {
      std::vector<std::size_t> pos(rows.size());
      std::iota(pos.begin(), pos.end(), 0);
      std::stable_sort(pos.begin(), pos.end(), [&](std::size_t x, std::size_t y) { return rsum[x] < rsum[y]; });
      // sigma sends rows[pos[t]] to rows[t]
      std::vector<std::size_t> sigma(a.rows());
      std::iota(sigma.begin(), sigma.end(), 0);
      for (std::size_t t = 0; t < rows.size(); ++t) sigma[rows[pos[t]]] = rows[t];
      std::vector<std::size_t> sigma_inv(a.rows());
      for (std::size_t i = 0; i < a.rows(); ++i) sigma_inv[sigma[i]] = i;
      std::vector<std::size_t> next(a.rows());
      for (std::size_t i = 0; i < a.rows(); ++i) next[i] = rho[sigma_inv[i]];
      return build(permute_rows(a, sigma), rows, w, next);
    }

    // pivot: first nonzero a(t, j) with t + j <= w, rows read top to bottom
    std::size_t t = 0, j = 0;
    bool found = false;
    for (std::size_t tt = 1; tt <= rows.size() && !found; ++tt) {
      for (std::size_t jj = 0; tt + jj <= w && !found; ++jj) {
        if (a(rows[tt - 1], jj) != 0) {
          t = tt;
          j = jj;
          found = true;
        }
      }
    }
    if (!found) inversion_failure(a, rows, w, "no pivot above the anti-diagonal");
    const std::size_t i = rows[t - 1];
    const auto c = field_.from_int(static_cast<std::int64_t>(a(i, j + 1)) + 1);

    if (!field_.is_zero(c)) {
      ExponentMatrix bar = a;
      bar(i, j) -= 1;
      bar(i, j + 1) += 1;
      const std::size_t base = build(bar, rows, w, rho);
      CertificateStep pol;
      pol.kind = CertificateStep::Kind::polarize;
      pol.j = j;
      pol.jp = j + 1;
      pol.arg = base;
      std::size_t cur = add_step(std::move(pol));
      // P_{j,j+1} x^bar = c x^A + sum_nu a(nu, j+1) x^{A_nu}
      std::vector<std::pair<std::uint32_t, std::size_t>> terms{{1, cur}};
      for (std::size_t nu = 0; nu < a.rows(); ++nu) {
        if (nu == i || bar(nu, j + 1) == 0) continue;
        ExponentMatrix an = bar;
        an(nu, j) += 1;
        an(nu, j + 1) -= 1;
        const auto coef = field_.neg(field_.from_int(bar(nu, j + 1)));
        if (field_.is_zero(coef)) continue;
        terms.emplace_back(coef, build(an, rows, w, rho));
      }
      if (terms.size() > 1) {
        CertificateStep comb;
        comb.kind = CertificateStep::Kind::combine;
        comb.terms = std::move(terms);
        cur = add_step(std::move(comb));
      }
      const auto inv = field_.inv(c);
      if (!field_.is_one(inv)) {
        CertificateStep sc;
        sc.kind = CertificateStep::Kind::scale;
        sc.scalar = inv;
        sc.arg = cur;
        cur = add_step(std::move(sc));
      }
      return cur;
    }

    // a(i, j+1) + 1 = 0 in k: recurse on copies 0..l' and rows t..w
    if (t == 1) inversion_failure(a, rows, w, "coefficient vanishes in the first row");
    const std::size_t lp = w + 1 - t;
    std::vector<std::size_t> sub(rows.begin() + static_cast<std::ptrdiff_t>(t - 1), rows.end());
    const std::size_t inner = build(a, sub, lp, rho);
    CertificateStep rec;
    rec.kind = CertificateStep::Kind::recurse;
    rec.arg = inner;
    rec.l_prime = lp;
    for (auto r : sub) rec.rows.push_back(rho[r] + 1);
    return add_step(std::move(rec));
  }

  PrimeField field_;
  std::size_t l_;
  std::vector<Register> registers_;
  std::map<std::vector<std::uint32_t>, std::size_t> source_index_;
  std::map<std::vector<std::uint32_t>, std::size_t> memo_;
  std::set<std::vector<std::uint32_t>> active_;
};

}  // namespace

RewriteCertificate rewrite_monomial(const ExponentMatrix& target, std::uint32_t p) {
  const std::size_t l = target.rows();
  if (l == 0 || target.cols() != l + 1) fail(ErrorKind::invalid_argument, "target must be an l x (l+1) exponent matrix");
  PrimeField f(p);
  const std::uint64_t bound = static_cast<std::uint64_t>(p - 1) * l;
  // a target already on copies 1..l needs no steps at any degree
  if (target.column_sum(0) != 0 && target.degree() > bound) {
    fail(ErrorKind::degree_out_of_range, "degree " + std::to_string(target.degree()) + " exceeds (p-1)l = " +
                                             std::to_string(bound) + "; no certificate is claimed");
  }
  return Rewriter(p, l).run(target);
}

std::size_t RewriteCertificate::operator_applications() const {
  return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const CertificateStep& s) {
    return s.kind == CertificateStep::Kind::polarize;
  }));
}

nlohmann::json RewriteCertificate::to_json() const {
  nlohmann::json src = nlohmann::json::array();
  for (const auto& s : sources) src.push_back(s.to_rows());
  nlohmann::json st = nlohmann::json::array();
  for (const auto& s : steps) {
    nlohmann::json j{{"kind", std::string(invtheory::to_string(s.kind))}};
    switch (s.kind) {
      case CertificateStep::Kind::polarize:
        j["arg"] = s.arg;
        j["j"] = s.j;
        j["jp"] = s.jp;
        break;
      case CertificateStep::Kind::permute_copies:
        j["arg"] = s.arg;
        j["perm"] = s.perm;
        break;
      case CertificateStep::Kind::scale:
        j["arg"] = s.arg;
        j["c"] = s.scalar;
        break;
      case CertificateStep::Kind::combine: {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [c, r] : s.terms) terms.push_back({c, r});
        j["terms"] = terms;
        break;
      }
      case CertificateStep::Kind::recurse:
        j["arg"] = s.arg;
        j["l_prime"] = s.l_prime;
        j["rows"] = s.rows;
        break;
    }
    st.push_back(std::move(j));
  }
  return {{"p", p},
          {"l", l},
          {"target", target.to_rows()},
          {"sources", src},
          {"steps", st},
          {"result", result},
          {"operator_applications", operator_applications()}};
}

RewriteCertificate RewriteCertificate::from_json(const nlohmann::json& j) {
  try {
    RewriteCertificate c;
    c.p = j.at("p").get<std::uint32_t>();
    c.l = j.at("l").get<std::size_t>();
    c.target = ExponentMatrix::from_rows(j.at("target").get<std::vector<std::vector<std::uint32_t>>>());
    for (const auto& s : j.at("sources")) {
      c.sources.push_back(ExponentMatrix::from_rows(s.get<std::vector<std::vector<std::uint32_t>>>()));
    }
    for (const auto& s : j.at("steps")) {
      CertificateStep step;
      step.kind = kind_from_string(s.at("kind").get<std::string>());
      if (s.contains("arg")) step.arg = s.at("arg").get<std::size_t>();
      if (s.contains("j")) step.j = s.at("j").get<std::size_t>();
      if (s.contains("jp")) step.jp = s.at("jp").get<std::size_t>();
      if (s.contains("perm")) step.perm = s.at("perm").get<std::vector<std::size_t>>();
      if (s.contains("c")) step.scalar = s.at("c").get<std::uint32_t>();
      if (s.contains("terms")) {
        for (const auto& t : s.at("terms")) step.terms.emplace_back(t.at(0).get<std::uint32_t>(), t.at(1).get<std::size_t>());
      }
      if (s.contains("l_prime")) step.l_prime = s.at("l_prime").get<std::size_t>();
      if (s.contains("rows")) step.rows = s.at("rows").get<std::vector<std::size_t>>();
      c.steps.push_back(std::move(step));
    }
    c.result = j.at("result").get<std::size_t>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse_error, std::string("certificate: ") + e.what());
  }
}

nlohmann::json ReplayResult::to_json() const {
  return {{"value", render(value)},
          {"sources_on_last_copies", sources_on_last_copies},
          {"reproduces_target", reproduces_target}};
}

ReplayResult replay(const RewriteCertificate& cert) {
  if (cert.l == 0) fail(ErrorKind::invalid_argument, "certificate with l = 0");
  PrimeField f(cert.p);
  auto layout = rewrite_layout(cert.l);
  std::vector<Polynomial<PrimeField>> regs;
  bool last_copies = true;
  for (const auto& s : cert.sources) {
    if (s.rows() != cert.l || s.cols() != cert.l + 1) fail(ErrorKind::dimension_mismatch, "source shape");
    if (s.column_sum(0) != 0) last_copies = false;
    regs.push_back(Polynomial<PrimeField>::monomial(f, layout, s.to_monomial(*layout)));
  }
  auto reg = [&](std::size_t r) -> const Polynomial<PrimeField>& {
    if (r >= regs.size()) fail(ErrorKind::invalid_argument, "certificate refers to a later register");
    return regs[r];
  };
  for (const auto& s : cert.steps) {
    switch (s.kind) {
      case CertificateStep::Kind::polarize:
        regs.push_back(polarize(reg(s.arg), PolarizationOperator{s.j, s.jp, 0}));
        break;
      case CertificateStep::Kind::permute_copies:
        regs.push_back(permute_copies(reg(s.arg), s.perm));
        break;
      case CertificateStep::Kind::scale:
        regs.push_back(reg(s.arg).scaled(f.from_int(s.scalar)));
        break;
      case CertificateStep::Kind::combine: {
        Polynomial<PrimeField> sum(f, layout);
        for (const auto& [c, r] : s.terms) sum = sum.axpy(f.from_int(c), reg(r));
        regs.push_back(std::move(sum));
        break;
      }
      case CertificateStep::Kind::recurse:
        regs.push_back(reg(s.arg));
        break;
    }
  }
  ReplayResult out{reg(cert.result), last_copies, false};
  auto expected = Polynomial<PrimeField>::monomial(f, layout, cert.target.to_monomial(*layout));
  out.reproduces_target = out.value == expected;
  return out;
}

}  // namespace invtheory
