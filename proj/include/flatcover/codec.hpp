#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flatcover/kw_encoder.hpp"
#include "flatcover/matroid.hpp"

namespace flatcover {

/// Flats that certify every non-basis among X and its Johnson neighbors.
struct LocalCover {
  ElementSet at;
  std::vector<FlatWithRank> flats;
};

/// { (cl(X - x), r(X - x)) : x in X }. At most r flats.
LocalCover local_cover_general(const Matroid& m, ElementSet x);

/// For a dependent r-set: { cl(X) } when r(X) < r - 1, else
/// { cl(C), cl(X) } with C the unique circuit in X. At most 2 flats.
/// Throws NotDependent for a basis.
LocalCover local_cover_dependent(const Matroid& m, ElementSet x);

enum class EncodingMethod { Dominating, KW };

const char* to_string(EncodingMethod method);
EncodingMethod parse_method(const std::string& name);

/**
 * Compressed matroid certificate: a flat cover plus the non-bases it leaves
 * uncovered. The r-sets that are neither covered nor listed are the bases.
 *
 * When `dualized` is set, cover and residual describe the dual matroid
 * (rank n - r) and decoding dualizes back; `r` is always the rank of the
 * encoded matroid itself.
 */
struct EncodedMatroid {
  int n = 0;
  int r = 0;
  EncodingMethod method = EncodingMethod::KW;
  bool dualized = false;
  std::vector<FlatWithRank> cover;   ///< ascending by flat mask
  std::vector<ElementSet> residual;  ///< ascending

  /// Rank of the matroid that cover and residual describe.
  int stored_rank() const { return dualized ? n - r : r; }

  friend bool operator==(const EncodedMatroid&, const EncodedMatroid&) = default;
};

/// Union of general local covers over a greedy dominating set of J(n, r).
/// Works for every rank; r = 0 and r = n give an empty cover.
EncodedMatroid encode_dominating(const Matroid& m);

/// Certificate plus the encoding-loop output it was built from.
struct KWMatroidEncoding {
  EncodedMatroid certificate;
  KWEncoding procedure;
  std::size_t dominating_set_size = 0;
};

/// Runs the encoding loop on the non-bases of M in J(n, r) and keeps the
/// dependent local covers of the selected sets plus the non-bases left in A.
/// Requires 0 < r <= n/2; throws RankOutOfRange otherwise.
KWMatroidEncoding encode_kw_detailed(const Matroid& m);
EncodedMatroid encode_kw(const Matroid& m);

/// Any rank: r = 0 and r = n give the empty certificate, r > n/2 encodes
/// the dual and sets `dualized`.
EncodedMatroid encode(const Matroid& m, EncodingMethod method);

/// Throws InvalidCertificate when the certificate is malformed or decodes to
/// a family that is not a matroid.
Matroid decode(const EncodedMatroid& e);

/// Size accounting for a certificate, in bits.
struct CertificateSize {
  double cover_bits;     ///< |cover| (n + log2(n+1))
  double residual_bits;  ///< |residual| log2 N
  double listing_bits;   ///< |non-bases| log2 N, the plain list
  double bitmap_bits;    ///< N, one bit per r-set
  double total() const { return cover_bits + residual_bits; }
};

CertificateSize certificate_size(const EncodedMatroid& e, std::size_t non_basis_count);

// Text format v1:
//   encmatroid 1 <n> <r> <method> <dualized:0|1>
//   F <rank> <elements...>   (cover, ascending by flat mask)
//   N <elements...>          (residual, ascending)
void write_encoded(std::ostream& os, const EncodedMatroid& e);
EncodedMatroid read_encoded(std::istream& is);
std::string to_text(const EncodedMatroid& e);

}  // namespace flatcover
