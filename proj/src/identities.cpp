#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "fishburn/bijections.hpp"
#include "fishburn/enumeration.hpp"
#include "fishburn/error.hpp"
#include "fishburn/interval_orders.hpp"
#include "fishburn/matrix_core.hpp"

namespace fishburn {

namespace {

// Poset-side count of self-dual interval orders is only run up to this size;
// it scans every Fishburn matrix of up to 2n entries.
constexpr std::size_t kPosetLegMaxSize = 4;

struct TransportFailure {
  std::string what;
  std::optional<TriMatrix> witness;
};

class Transport {
 public:
  // The first failure wins; cardinality failures carry no witness.
  void fail(const std::string& what, std::optional<TriMatrix> witness = std::nullopt) {
    if (!failure_) failure_ = TransportFailure{what, std::move(witness)};
  }
  bool ok() const { return !failure_; }

  void write(IdentityReport& r) const {
    r.transport_ok = ok();
    if (failure_) {
      r.failure = r.failure.empty() ? failure_->what : r.failure + "; " + failure_->what;
      r.counterexample = failure_->witness;
    }
  }

 private:
  std::optional<TransportFailure> failure_;
};

std::string show(const TriMatrix& m) {
  std::string s = format_matrix(m);
  for (char& c : s)
    if (c == '\n') c = '/';
  return s;
}

void count_mismatch(IdentityReport& r, const std::string& what) {
  r.counts_ok = false;
  if (r.failure.empty()) r.failure = what;
}

// Images of M(n) restricted by `keep` under the full chain
// project(beta(alpha(M))), with injectivity, target membership, statistic
// transport and inverse checked per element.
template <typename Keep, typename Check>
std::size_t transport_chain(const std::vector<TriMatrix>& domain, const std::set<TriMatrix>& rm,
                            Transport& t, Keep keep, Check check) {
  std::set<SignedRowFishburn> images;
  for (const TriMatrix& m : domain) {
    if (!keep(m)) continue;
    try {
      const SignedRowFishburn img = selfdual_to_signed_rm(m);
      if (!rm.contains(img.matrix)) {
        t.fail("image is not a row-Fishburn matrix of size n", m);
        continue;
      }
      if (auto why = check(m, img)) {
        t.fail(*why, m);
        continue;
      }
      if (!images.insert(img).second) {
        t.fail("two matrices share the image " + show(img.matrix), m);
        continue;
      }
      if (signed_rm_to_selfdual(img) != m) t.fail("inverse chain does not return the input", m);
    } catch (const Error& e) {
      t.fail(e.what(), m);
    }
  }
  return images.size();
}

IdentityReport verify_eq1_eq2(Identity id, std::size_t n) {
  IdentityReport r{id, n, true, false, {}, {}, {}};
  const bool zero_diag = id == Identity::EQ1;
  const CountTable sd = count_refined(FamilyTag::SelfDual, n);
  const CountTable rmt = count_refined(FamilyTag::RM, n);

  std::uint64_t lhs_total = 0, rhs_total = 0;
  for (Entry k = 0; k <= n; ++k) {
    for (Entry p = 0; p <= n; ++p) {
      if (zero_diag != (p == 0)) continue;
      const auto lhs = sd.sum_where([&](const CountKey& c) { return c.k == k && c.p == p; });
      const auto rhs = zero_diag ? rmt.sum_where([&](const CountKey& c) { return c.k == k; })
                                 : rmt.sum_where([&](const CountKey& c) { return c.k == k && c.p == p; });
      lhs_total += lhs;
      rhs_total += rhs;
      if (lhs != rhs) {
        std::ostringstream os;
        os << "k=" << k << " p=" << p << ": " << lhs << " != " << rhs;
        count_mismatch(r, os.str());
      }
    }
  }
  std::ostringstream summary;
  summary << (zero_diag ? "|M(n,k,0)| = |RM(n,k)|" : "|M(n,k,p)| = |RM(n,k,p)| (p>=1)")
          << " for all k; totals " << lhs_total << " = " << rhs_total;
  r.summary = summary.str();

  const auto rm_list = enumerate_family(FamilyTag::RM, n);
  const std::set<TriMatrix> rm(rm_list.begin(), rm_list.end());
  const auto domain = enumerate_family(FamilyTag::SelfDual, n);
  Transport t;
  const std::size_t image_count = transport_chain(
      domain, rm, t, [&](const TriMatrix& m) { return (stats(m).diag_sum == 0) == zero_diag; },
      [&](const TriMatrix& m, const SignedRowFishburn& img) -> std::optional<std::string> {
        const StatVector src = stats(m), dst = stats(img.matrix);
        if (img.flag != (zero_diag ? 1 : 0)) return "unexpected zero-first-row flag";
        if (dst.last_col_sum != src.first_row_sum) return "last-column sum != first-row sum";
        if (!zero_diag && dst.first_row_sum != src.diag_sum) return "first-row sum != diagonal sum";
        return std::nullopt;
      });
  const std::uint64_t target =
      zero_diag ? rmt.total : rmt.sum_where([](const CountKey& c) { return c.p >= 1; });
  if (t.ok() && image_count != target) {
    t.fail("image covers " + std::to_string(image_count) + " of " + std::to_string(target) +
           " target matrices");
  }
  t.write(r);
  return r;
}

IdentityReport verify_eq3(std::size_t n) {
  IdentityReport r{Identity::EQ3, n, true, false, {}, {}, {}};
  const auto domain = enumerate_family(FamilyTag::SelfDual, n);
  const auto rm_list = enumerate_family(FamilyTag::RM, n);
  const std::set<TriMatrix> rm(rm_list.begin(), rm_list.end());

  std::ostringstream summary;
  summary << domain.size() << " = 2·" << rm.size();
  if (domain.size() != 2 * rm.size()) count_mismatch(r, "|M(n)| != 2|RM(n)|");
  if (n <= kPosetLegMaxSize) {
    const std::uint64_t orders = count_self_dual_interval_orders(n);
    summary << "; |I(" << n << ")| = " << orders;
    if (orders != domain.size()) count_mismatch(r, "|I(n)| != |M(n)|");
  }
  r.summary = summary.str();

  Transport t;
  const std::size_t image_count = transport_chain(
      domain, rm, t, [](const TriMatrix&) { return true; },
      [](const TriMatrix& m, const SignedRowFishburn& img) -> std::optional<std::string> {
        if (size(img.matrix) != reduced_size(m)) return "size not preserved";
        return std::nullopt;
      });
  if (t.ok() && image_count != 2 * rm.size()) {
    t.fail("image does not cover RM(n) x {0,1}");
  }
  t.write(r);
  return r;
}

IdentityReport verify_eq4(std::size_t n) {
  IdentityReport r{Identity::EQ4, n, true, false, {}, {}, {}};
  const auto b = enumerate_family(FamilyTag::B, n);
  const auto rm_list = enumerate_family(FamilyTag::RM, n);
  const std::set<TriMatrix> rm(rm_list.begin(), rm_list.end());
  r.summary = std::to_string(b.size()) + " = 2·" + std::to_string(rm.size());
  if (b.size() != 2 * rm.size()) count_mismatch(r, "|B(n)| != 2|RM(n)|");

  Transport t;
  std::set<SignedRowFishburn> images;
  for (const TriMatrix& m : b) {
    try {
      const SignedRowFishburn s = project_b_to_signed_rm(m);
      if (!rm.contains(s.matrix)) t.fail("projection is not in RM(n)", m);
      else if (!images.insert(s).second) t.fail("projection not injective", m);
      else if (embed_rm_in_b(s.matrix, s.flag) != m) t.fail("embed does not invert projection", m);
    } catch (const Error& e) {
      t.fail(e.what(), m);
    }
  }
  if (t.ok() && images.size() != 2 * rm.size()) {
    t.fail("projection does not cover RM(n) x {0,1}");
  }
  t.write(r);
  return r;
}

IdentityReport verify_eq8(std::size_t n) {
  IdentityReport r{Identity::EQ8, n, true, false, {}, {}, {}};
  const CountTable sd = count_refined(FamilyTag::SelfDual, n);
  const CountTable rmt = count_refined(FamilyTag::RM, n);
  std::uint64_t em_total = 0, om_total = 0;
  for (Entry k = 0; k <= n; ++k) {
    const auto em = sd.sum_where([&](const CountKey& c) { return c.k == k && c.parity == ParityKey::Even; });
    const auto om = sd.sum_where([&](const CountKey& c) { return c.k == k && c.parity == ParityKey::Odd; });
    const auto rk = rmt.sum_where([&](const CountKey& c) { return c.k == k; });
    em_total += em;
    om_total += om;
    if (em != rk || om != rk) {
      std::ostringstream os;
      os << "k=" << k << ": EM " << em << ", OM " << om << ", RM " << rk;
      count_mismatch(r, os.str());
    }
  }
  r.summary = "|EM(n,k)| = |OM(n,k)| = |RM(n,k)| for all k; totals " + std::to_string(em_total) +
              " = " + std::to_string(om_total) + " = " + std::to_string(rmt.total);

  const auto domain = enumerate_family(FamilyTag::SelfDual, n);
  const auto rm_list = enumerate_family(FamilyTag::RM, n);
  const std::set<TriMatrix> rm(rm_list.begin(), rm_list.end());
  Transport t;

  // Even dimension: EM(n,k) -> SM(n,k,0) -> B(n,k,0) -> RM(n,k).
  std::map<Entry, std::uint64_t> em_image, chain_image;
  std::set<TriMatrix> em_seen;
  for (const TriMatrix& m : domain) {
    if (m.dim() % 2 != 0) continue;
    try {
      const Entry k = stats(m).first_row_sum;
      const TriMatrix a = em_to_sm(m);
      const StatVector sa = stats(a);
      const SignedRowFishburn s = project_b_to_signed_rm(beta(a).matrix);
      if (!is_sm_member(a) || sa.center_col_sum != 0 || sa.first_row_sum != k) {
        t.fail("image is not in SM(n,k,0)", m);
      } else if (sm_to_em(a) != m) {
        t.fail("inverse of the even-dimension embedding does not return the input", m);
      } else if (s.flag != 1 || !rm.contains(s.matrix) || stats(s.matrix).last_col_sum != k) {
        t.fail("image is not in RM(n,k)", m);
      } else if (!em_seen.insert(s.matrix).second) {
        t.fail("even-dimension transport not injective", m);
      } else {
        ++em_image[k];
      }
    } catch (const Error& e) {
      t.fail(e.what(), m);
    }
  }
  // All dimensions: M(n,k) -> RM(n,k) x {0,1}; the odd part is the complement.
  transport_chain(
      domain, rm, t, [](const TriMatrix&) { return true; },
      [&](const TriMatrix& m, const SignedRowFishburn& img) -> std::optional<std::string> {
        const Entry k = stats(m).first_row_sum;
        if (stats(img.matrix).last_col_sum != k) return "last-column sum != first-row sum";
        ++chain_image[k];
        return std::nullopt;
      });
  if (t.ok()) {
    for (Entry k = 0; k <= n; ++k) {
      const auto rk = rmt.sum_where([&](const CountKey& c) { return c.k == k; });
      const auto om = sd.sum_where([&](const CountKey& c) { return c.k == k && c.parity == ParityKey::Odd; });
      const std::uint64_t odd_image = chain_image[k] - em_image[k];
      if (em_image[k] != rk || chain_image[k] != 2 * rk || odd_image != om) {
        t.fail("k=" + std::to_string(k) + ": transported counts EM " +
                                   std::to_string(em_image[k]) + ", OM " +
                                   std::to_string(odd_image) + ", RM " + std::to_string(rk));
        break;
      }
    }
  }
  t.write(r);
  return r;
}

}  // namespace

std::string_view to_string(Identity id) {
  switch (id) {
    case Identity::EQ1: return "EQ1";
    case Identity::EQ2: return "EQ2";
    case Identity::EQ3: return "EQ3";
    case Identity::EQ4: return "EQ4";
    case Identity::EQ8: return "EQ8";
  }
  return "?";
}

std::optional<Identity> parse_identity(std::string_view name) {
  std::string u(name);
  for (char& c : u) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (Identity id : all_identities())
    if (u == to_string(id)) return id;
  return std::nullopt;
}

const std::vector<Identity>& all_identities() {
  static const std::vector<Identity> ids{Identity::EQ1, Identity::EQ2, Identity::EQ3, Identity::EQ4,
                                         Identity::EQ8};
  return ids;
}

IdentityReport verify_identity(Identity id, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::Unsupported, "identities are checked for n >= 1");
  switch (id) {
    case Identity::EQ1:
    case Identity::EQ2: return verify_eq1_eq2(id, n);
    case Identity::EQ3: return verify_eq3(n);
    case Identity::EQ4: return verify_eq4(n);
    case Identity::EQ8: return verify_eq8(n);
  }
  throw Error(ErrorKind::Unsupported, "unknown identity");
}

}  // namespace fishburn
