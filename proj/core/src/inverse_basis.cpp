#include "szt/inverse_basis.hpp"

#include <algorithm>
#include <iterator>
#include <map>

namespace szt {

namespace {

// all subsets of a sorted list, in mask order
std::vector<std::vector<int>> subsets_of(const std::vector<int>& s) {
  std::vector<std::vector<int>> out;
  const std::size_t m = s.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) sub.push_back(s[i]);
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace

InverseFamily build_family(const Arrangement& A) {
  InverseFamily fam;
  fam.records = all_activities(A);
  const int n = A.dim();

  std::vector<SuperElement> alpha, dalpha;
  for (int i = 0; i < A.size(); ++i) {
    alpha.push_back(SuperElement::linear_form(A.hyperplane(i).normal));
    dalpha.push_back(alpha.back().euler_d());
  }

  for (std::size_t bi = 0; bi < fam.records.size(); ++bi) {
    const BasisRecord& rec = fam.records[bi];
    SuperElement base = SuperElement::constant(n, 1);
    for (int e : rec.ext_passive) base = base * alpha[e];

    for (const auto& I : subsets_of(rec.int_passive)) {
      for (const auto& S : subsets_of(rec.int_active)) {
        // T runs over subsets of the internally active outside S
        std::vector<int> rest;
        std::set_difference(rec.int_active.begin(), rec.int_active.end(), S.begin(), S.end(),
                            std::back_inserter(rest));
        for (const auto& T : subsets_of(rest)) {
          SuperElement el = base;
          for (int s : S) el = el * alpha[s];
          // fermionic factors in increasing hyperplane order
          std::vector<int> ferm;
          ferm.insert(ferm.end(), I.begin(), I.end());
          ferm.insert(ferm.end(), T.begin(), T.end());
          std::sort(ferm.begin(), ferm.end());
          for (int f : ferm) el = el * dalpha[f];
          FamilyDescriptor d;
          d.basis_index = static_cast<int>(bi);
          d.dalpha_passive = I;
          d.alpha_active = S;
          d.dalpha_active = T;
          d.bd = Bidegree{static_cast<int>(rec.ext_passive.size() + S.size()),
                          static_cast<int>(I.size() + T.size())};
          fam.descriptors.push_back(std::move(d));
          fam.elements.push_back(std::move(el));
        }
      }
    }
  }
  return fam;
}

BigradedSeries family_census(const std::vector<BasisRecord>& records) {
  const BiPoly onqt = BiPoly::constant(1) + BiPoly::monomial(1, 0) + BiPoly::monomial(0, 1);
  const BiPoly ont = BiPoly::constant(1) + BiPoly::monomial(0, 1);
  BigradedSeries S;
  for (const auto& rec : records) {
    BiPoly term = BiPoly::monomial(static_cast<int>(rec.ext_passive.size()), 0);
    term = term * pow(onqt, static_cast<int>(rec.int_active.size()));
    term = term * pow(ont, static_cast<int>(rec.int_passive.size()));
    S += term;
  }
  return S;
}

FamilyCheck verify_family(const InverseFamily& fam, const PerpSystem& sys) {
  FamilyCheck out;
  const int n = sys.arrangement().dim();

  // membership and declared bidegrees
  for (std::size_t i = 0; i < fam.elements.size() && out.membership; ++i) {
    const auto bd = fam.elements[i].bidegree();
    if (!bd || *bd != fam.descriptors[i].bd) {
      out.membership = false;
      out.detail = "element " + std::to_string(i) + " is not bihomogeneous of the declared bidegree";
      break;
    }
    if (!sys.contains(fam.elements[i])) {
      out.membership = false;
      out.detail = "element " + std::to_string(i) + " = " + fam.elements[i].str() +
                   " is not annihilated by the constraint system";
    }
  }

  // per-slice linear independence
  std::map<Bidegree, std::vector<int>> slices;
  for (std::size_t i = 0; i < fam.descriptors.size(); ++i)
    slices[fam.descriptors[i].bd].push_back(static_cast<int>(i));
  for (const auto& [bd, members] : slices) {
    const auto mons = x_monomials(n, bd.bos);
    const auto words = theta_words(n, bd.ferm);
    std::map<TermKey, int> index;
    for (const auto& mu : mons)
      for (const auto& K : words) {
        const int id = static_cast<int>(index.size());
        index.emplace(TermKey{mu, K}, id);
      }
    RowReducer red(static_cast<int>(index.size()));
    int rank = 0;
    for (int i : members) {
      RatVec row(index.size(), Rat(0));
      for (const auto& [k, c] : fam.elements[i].terms()) row[index.at(k)] = c;
      if (red.add_row(row)) ++rank;
    }
    if (rank != static_cast<int>(members.size())) {
      out.independent = false;
      out.detail = "family elements of bidegree (" + std::to_string(bd.bos) + "," +
                   std::to_string(bd.ferm) + ") are linearly dependent";
      break;
    }
  }

  // census against the kernel dimensions and the activity expansion
  BigradedSeries census;
  for (const auto& d : fam.descriptors) census.add_term(d.bd.bos, d.bd.ferm, 1);
  if (!(census == sys.hilbert())) {
    out.census_matches_kernel = false;
    out.detail = "family census disagrees with the kernel dimensions";
  }
  if (!(census == family_census(fam.records))) {
    out.census_matches_activity = false;
    out.detail = "family census disagrees with the activity expansion";
  }
  return out;
}

std::vector<int> external_subfamily(const InverseFamily& fam) {
  std::vector<int> out;
  for (std::size_t i = 0; i < fam.descriptors.size(); ++i)
    if (fam.descriptors[i].bd.ferm == 0) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> central_subfamily(const InverseFamily& fam, int rank) {
  std::vector<int> out;
  for (std::size_t i = 0; i < fam.descriptors.size(); ++i)
    if (fam.descriptors[i].bd.ferm == rank) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace szt
