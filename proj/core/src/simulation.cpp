#include "pnc/simulation.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "importance.hpp"
#include "parallel.hpp"
#include "pnc/errors.hpp"

namespace pnc {
namespace {

// Substream tags keep the two estimators' streams apart.
constexpr std::uint64_t kSerStream = 0x5345520000000001ULL;
constexpr std::uint64_t kPairStream = 0x5041495200000002ULL;

struct BlockTally {
  std::uint64_t trials = 0;
  std::uint64_t errors_a = 0;
  std::uint64_t errors_b = 0;
  std::uint64_t errors_union = 0;
  std::uint64_t bit_errors = 0;
};

void validate(const SimulationConfig& cfg, const RelayPolicy& policy) {
  if (cfg.snr_db.empty()) throw InvalidArgument("SNR list must not be empty");
  if (cfg.max_trials == 0) throw InvalidArgument("trial budget must be positive");
  if (cfg.block_size == 0) throw InvalidArgument("block size must be positive");
  if (!(cfg.k_factor >= 0.0)) throw InvalidArgument("Rician factor must be non-negative");
  if (policy.constellation().size() != cfg.order) {
    throw InvalidArgument("relay policy was built for a different constellation");
  }
  if (policy.adaptive() != is_adaptive(cfg.scheme)) {
    throw InvalidArgument("scheme '" + std::string(to_string(cfg.scheme)) +
                          "' does not match the relay policy");
  }
}

double noise_variance(const SimulationConfig& cfg, double snr_db) {
  return cfg.symbol_energy / std::pow(10.0, snr_db / 10.0);
}

int select_id(const RelayPolicy& policy, Complex ha, Complex hb) {
  if (!policy.adaptive()) return 0;
  const Complex z = hb / ha;
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return policy.map_count() - 1;
  return policy.select(z);
}

BlockTally run_block(const SimulationConfig& cfg, const RelayPolicy& policy, double snr_db,
                     std::uint64_t block, std::uint64_t trials) {
  const Constellation& c = policy.constellation();
  const auto labels = c.labels();
  const double sigma2 = noise_variance(cfg, snr_db);
  const double amp = std::sqrt(cfg.symbol_energy);

  Engine rng = make_engine(cfg.seed, {kSerStream, std::bit_cast<std::uint64_t>(snr_db), block});
  RicianSampler rician(RicianParams{cfg.k_factor});
  ComplexGaussian noise;
  std::uniform_int_distribution<int> symbol(0, c.size() - 1);

  BlockTally tally;
  tally.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const int a = symbol(rng);
    const int b = symbol(rng);
    const Complex ha = rician(rng);
    const Complex hb = rician(rng);
    const Complex ha_bc = rician(rng);
    const Complex hb_bc = rician(rng);
    const Complex z_r = noise(rng, sigma2);
    const Complex z_a = noise(rng, sigma2);
    const Complex z_b = noise(rng, sigma2);

    const int id = select_id(policy, ha, hb);
    const ClusterMap& map = policy.map(id);
    const auto bc = policy.bc_points(id);

    const Complex y_r = amp * (ha * c.point(a) + hb * c.point(b)) + z_r;
    const SymbolPair relay = relay_ml_decode(c, ha, hb, y_r, cfg.symbol_energy);
    const Complex x_r = bc[static_cast<std::size_t>(map.label(relay.a, relay.b))];

    const Complex y_a = amp * ha_bc * x_r + z_a;
    const Complex y_b = amp * hb_bc * x_r + z_b;
    const int b_hat = end_node_decode(map, bc, EndNode::A, a, ha_bc, y_a, cfg.symbol_energy);
    const int a_hat = end_node_decode(map, bc, EndNode::B, b, hb_bc, y_b, cfg.symbol_energy);

    const bool err_a = b_hat != b;
    const bool err_b = a_hat != a;
    tally.errors_a += err_a;
    tally.errors_b += err_b;
    tally.errors_union += (err_a || err_b);
    tally.bit_errors += static_cast<std::uint64_t>(
        std::popcount(static_cast<unsigned>(labels[static_cast<std::size_t>(b_hat)] ^
                                            labels[static_cast<std::size_t>(b)])) +
        std::popcount(static_cast<unsigned>(labels[static_cast<std::size_t>(a_hat)] ^
                                            labels[static_cast<std::size_t>(a)])));
  }
  return tally;
}

}  // namespace

std::vector<SerEstimate> simulate_ser(const SimulationConfig& cfg, const RelayPolicy& policy) {
  validate(cfg, policy);
  const std::uint64_t total_blocks = (cfg.max_trials + cfg.block_size - 1) / cfg.block_size;
  const int workers = std::max(1, cfg.workers);
  const std::uint64_t wave = workers == 1 ? 1 : static_cast<std::uint64_t>(workers) * 4;
  const int bits = policy.constellation().bits_per_symbol();

  std::vector<SerEstimate> out;
  for (double snr_db : cfg.snr_db) {
    BlockTally sum;
    bool done = false;
    for (std::uint64_t first = 0; first < total_blocks && !done; first += wave) {
      const std::uint64_t last = std::min(total_blocks, first + wave);
      std::vector<BlockTally> tallies(last - first);
      detail::parallel_for(first, last, workers, [&](std::uint64_t block) {
        const std::uint64_t start = block * cfg.block_size;
        const std::uint64_t n = std::min(cfg.block_size, cfg.max_trials - start);
        tallies[block - first] = run_block(cfg, policy, snr_db, block, n);
      });
      // Reduce in block order so the stopping point is independent of workers.
      for (const BlockTally& t : tallies) {
        sum.trials += t.trials;
        sum.errors_a += t.errors_a;
        sum.errors_b += t.errors_b;
        sum.errors_union += t.errors_union;
        sum.bit_errors += t.bit_errors;
        if (sum.errors_union >= cfg.target_errors) {
          done = true;
          break;
        }
      }
    }
    SerEstimate est;
    est.snr_db = snr_db;
    est.trials = sum.trials;
    est.errors_a = sum.errors_a;
    est.errors_b = sum.errors_b;
    est.errors_union = sum.errors_union;
    est.bit_errors = sum.bit_errors;
    const double n = static_cast<double>(sum.trials);
    est.ser = static_cast<double>(sum.errors_union) / n;
    est.std_error = std::sqrt(est.ser * (1.0 - est.ser) / n);
    est.ber = static_cast<double>(sum.bit_errors) / (2.0 * bits * n);
    out.push_back(est);
  }
  return out;
}

std::vector<PairwiseEstimate> estimate_pairwise(const SimulationConfig& cfg, SymbolPair sent,
                                                SymbolPair decoded, const RelayPolicy& policy,
                                                std::uint64_t draws) {
  validate(cfg, policy);
  if (sent == decoded) throw InvalidArgument("sent and decoded pairs must differ");
  if (draws == 0) throw InvalidArgument("draw count must be positive");
  const Constellation& c = policy.constellation();
  const int n = c.size();
  if (sent.a < 0 || sent.a >= n || sent.b < 0 || sent.b >= n || decoded.a < 0 ||
      decoded.a >= n || decoded.b < 0 || decoded.b >= n) {
    throw InvalidArgument("symbol index out of range");
  }
  const Complex da = c.point(sent.a) - c.point(decoded.a);
  const Complex db = c.point(sent.b) - c.point(decoded.b);
  const double amp = std::sqrt(cfg.symbol_energy);
  const std::uint64_t total_blocks = (draws + cfg.block_size - 1) / cfg.block_size;

  std::vector<PairwiseEstimate> out;
  for (double snr_db : cfg.snr_db) {
    const double sigma2 = noise_variance(cfg, snr_db);
    const double snr = cfg.symbol_energy / sigma2;
    std::vector<detail::WeightedMoments> parts(total_blocks);
    detail::parallel_for(0, total_blocks, cfg.workers, [&](std::uint64_t block) {
      Engine rng = make_engine(cfg.seed, {kPairStream, std::bit_cast<std::uint64_t>(snr_db),
                                          static_cast<std::uint64_t>(sent.a * n + sent.b),
                                          static_cast<std::uint64_t>(decoded.a * n + decoded.b),
                                          block});
      detail::ManifoldProposal proposal(da, db, cfg.k_factor, snr);
      ComplexGaussian noise;
      const std::uint64_t count = std::min(cfg.block_size, draws - block * cfg.block_size);
      auto& acc = parts[block];
      for (std::uint64_t t = 0; t < count; ++t) {
        double w = 1.0;
        const auto [ha, hb] = proposal.draw(rng, w);
        const Complex y = amp * (ha * c.point(sent.a) + hb * c.point(sent.b)) + noise(rng, sigma2);
        double value = 0.0;
        if (relay_ml_decode(c, ha, hb, y, cfg.symbol_energy) == decoded) {
          const ClusterMap& map = policy.map(select_id(policy, ha, hb));
          if (map.label(sent.a, sent.b) != map.label(decoded.a, decoded.b)) value = w;
        }
        acc.add(value);
      }
    });
    detail::WeightedMoments total;
    for (const auto& p : parts) total.merge(p);
    out.push_back({snr_db, total.mean(), total.std_error(), total.n, total.nonzero});
  }
  return out;
}

}  // namespace pnc
