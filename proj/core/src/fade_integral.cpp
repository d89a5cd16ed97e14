#include "pnc/fade_integral.hpp"

#include <cmath>

#include "importance.hpp"
#include "pnc/errors.hpp"
#include "pnc/special_functions.hpp"

namespace pnc {

McEstimate pairwise_fade_integral(Complex da, Complex db, double k_factor, double snr,
                                  const std::function<bool(Complex)>& region,
                                  const FadeIntegralOptions& options) {
  if (options.draws == 0) throw InvalidArgument("draw count must be positive");
  if (!(snr > 0.0)) throw InvalidArgument("snr must be positive");
  if (!(k_factor >= 0.0)) throw InvalidArgument("Rician factor must be non-negative");
  if (std::norm(da) + std::norm(db) == 0.0) throw InvalidArgument("difference pair must be nonzero");

  Engine rng = make_engine(options.seed, {0x4641444500000003ULL});
  detail::ManifoldProposal proposal(da, db, k_factor, snr);
  if (!options.importance) proposal.disable();
  const double scale = std::sqrt(snr / 2.0);
  detail::WeightedMoments acc;
  for (std::uint64_t t = 0; t < options.draws; ++t) {
    double w = 1.0;
    const auto [ha, hb] = proposal.draw(rng, w);
    double value = 0.0;
    if (!region || region(hb / ha)) value = w * gaussian_q(scale * std::abs(ha * da + hb * db));
    acc.add(value);
  }
  return {acc.mean(), acc.std_error(), acc.n};
}

}  // namespace pnc
