#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pnc/bounds.hpp"
#include "pnc/quantizer.hpp"
#include "pnc/simulation.hpp"

namespace pnc {

/// {"M": int, "points": [[re, im], ...], "labels": [int, ...]}
std::string constellation_json(const Constellation& c);

/// Columns: s_re,s_im,magnitude,phase,dominance,n_generators
std::string singular_csv(std::span<const SingularState> states);

/// JSON array of {singular_state: [re, im], labels: [[...]], n_clusters}.
std::string map_catalog_json(const MapLibrary& lib);

/// Columns: re,im,map_id
std::string raster_csv(const Raster& raster);

/// Columns: s_re,s_im,delta
std::string delta_csv(std::span<const DeltaEstimate> deltas);

/// Columns: scheme,snr_db,trials,errors_A,errors_B,errors_union,ser,stderr
std::string ser_csv_header();
std::string ser_csv_rows(std::string_view scheme, std::span<const SerEstimate> rows);

/// Columns: scheme,snr_db,ma_cross,ma_nonremovable,ma_unremoved,bc,total
std::string bound_csv_header();
std::string bound_csv_row(std::string_view scheme, double snr_db, const BoundReport& report);

/// Reads rows written by ser_csv_rows (header optional) for one scheme.
std::vector<SerEstimate> parse_ser_csv(std::string_view text, std::string_view scheme);

}  // namespace pnc
