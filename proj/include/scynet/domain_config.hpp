#pragma once

// Domain parameter set and the absolute timestamp schedule derived from it.
// Field names follow the camelCase protocol parameters in scenario files;
// here they are snake_case. Immutable after validation.

#include <optional>
#include <string>
#include <vector>

#include "scynet/common.hpp"
#include "scynet/codec.hpp"

namespace scynet {

enum class ProblemType : uint8_t { RealTime = 0, Dataset = 1 };

// Two readings of "highest tournamentCutoff % stake": top percentage of the
// submitted-agent count ranked by stake, or the smallest stake-descending
// prefix holding that percentage of total submitted stake.
enum class CutoffMode : uint8_t { ByCount = 0, ByStake = 1 };

enum class RentFeeDestination : uint8_t { Maintenance = 0, Burn = 1 };

// Whether agent submission stakes are consumed into the reward pool (fee
// reading) or returned to non-winning, non-disqualified agents at settlement.
enum class SubmitStakeMode : uint8_t { Fee = 0, RefundLosers = 1 };

struct DomainConfig {
    ProblemType problem_type = ProblemType::RealTime;
    Duration tournament_start_frequency = 3'600'000;
    Duration challenger_submission_timeout = 600'000;
    Duration dataset_signal_key_timeout = 600'000;
    Duration ranking_timeout = 600'000;
    Duration real_time_frequency = 900'000;  // RealTime domains only
    uint64_t min_agent_challengers = 1;
    uint32_t min_agent_challenger_voting_power = 0;  // percent of total power
    Amount min_agent_submit_stake = 1;
    Amount min_price_publish_stake = 1;
    Amount rent_fee = 0;
    uint32_t tournament_cutoff = 100;  // percent, (0, 100]
    Duration block_time = 1'000;       // simulator parameter
    Address maintenance_address{};

    // Artifact knobs; the paper's companion transaction document is not
    // available, so limits and ambiguous readings are config-exposed.
    CutoffMode cutoff_mode = CutoffMode::ByCount;
    RentFeeDestination rent_fee_destination = RentFeeDestination::Maintenance;
    SubmitStakeMode submit_stake_mode = SubmitStakeMode::Fee;
    uint64_t rate_limit_per_window = 4;   // accepted fee-less txs per sender/type/window
    Duration rate_limit_window = 0;       // 0 = one block_time
    uint64_t coin_age_cap = 10'000;       // periods
    uint64_t max_selection_draws = 10'000;

    Duration effective_rate_window() const {
        return rate_limit_window > 0 ? rate_limit_window : block_time;
    }

    void encode(Encoder& e) const {
        e.u64(uint64_t(problem_type));
        e.i64(tournament_start_frequency);
        e.i64(challenger_submission_timeout);
        e.i64(dataset_signal_key_timeout);
        e.i64(ranking_timeout);
        e.i64(real_time_frequency);
        e.u64(min_agent_challengers);
        e.u64(min_agent_challenger_voting_power);
        e.u64(min_agent_submit_stake);
        e.u64(min_price_publish_stake);
        e.u64(rent_fee);
        e.u64(tournament_cutoff);
        e.i64(block_time);
        e.fixed(maintenance_address);
        e.u64(uint64_t(cutoff_mode));
        e.u64(uint64_t(rent_fee_destination));
        e.u64(uint64_t(submit_stake_mode));
        e.u64(rate_limit_per_window);
        e.i64(rate_limit_window);
        e.u64(coin_age_cap);
        e.u64(max_selection_draws);
    }
};

struct ConfigError {
    std::string field;
    std::string message;
};

inline std::optional<ConfigError> validate_config(const DomainConfig& cfg) {
    auto err = [](std::string field, std::string msg) {
        return std::optional<ConfigError>(ConfigError{std::move(field), std::move(msg)});
    };
    if (cfg.tournament_start_frequency <= 0)
        return err("tournamentStartFrequency", "must be > 0");
    if (cfg.challenger_submission_timeout <= 0)
        return err("challengerSubmissionTimeout", "must be > 0");
    if (cfg.dataset_signal_key_timeout <= 0)
        return err("datasetSignalKeyTimeout", "must be > 0");
    if (cfg.ranking_timeout <= 0)
        return err("rankingTimeout", "must be > 0");
    if (cfg.block_time <= 0)
        return err("blockTime", "must be > 0");
    if (cfg.problem_type == ProblemType::RealTime) {
        if (cfg.real_time_frequency <= 0)
            return err("realTimeFrequency", "must be > 0");
        if (cfg.tournament_start_frequency % cfg.real_time_frequency != 0)
            return err("realTimeFrequency",
                       "must divide tournamentStartFrequency so ticks align with tournaments");
    }
    if (cfg.challenger_submission_timeout >= cfg.tournament_start_frequency)
        return err("challengerSubmissionTimeout", "must be < tournamentStartFrequency");
    if (cfg.dataset_signal_key_timeout > cfg.ranking_timeout)
        return err("datasetSignalKeyTimeout", "must be <= rankingTimeout");
    if (cfg.min_agent_challenger_voting_power > 100)
        return err("minAgentChallengerVotingPower", "must be <= 100");
    if (cfg.min_agent_challengers < 1)
        return err("minAgentChallengers", "must be >= 1");
    if (cfg.tournament_cutoff < 1 || cfg.tournament_cutoff > 100)
        return err("tournamentCutoff", "must be in (0, 100]");
    return std::nullopt;
}

// Absolute schedule of tournament k (k >= 1). Starts sit at
// k * tournamentStartFrequency; a tournament ends exactly where the next
// one starts.
struct Schedule {
    int64_t index = 0;
    Timestamp start = 0;
    Timestamp end = 0;
    Timestamp challenger_deadline = 0;
    Timestamp dataset_key_deadline = 0;
    Timestamp ranking_deadline = 0;
    std::vector<Timestamp> ticks;  // RealTime only
};

inline Schedule schedule_for(const DomainConfig& cfg, int64_t k) {
    Schedule s;
    s.index = k;
    s.start = k * cfg.tournament_start_frequency;
    s.end = (k + 1) * cfg.tournament_start_frequency;
    s.challenger_deadline = s.start + cfg.challenger_submission_timeout;
    s.dataset_key_deadline = s.end + cfg.dataset_signal_key_timeout;
    s.ranking_deadline = s.end + cfg.ranking_timeout;
    if (cfg.problem_type == ProblemType::RealTime) {
        for (Timestamp t = s.start; t < s.end; t += cfg.real_time_frequency)
            s.ticks.push_back(t);
    }
    return s;
}

// Tournament index covering timestamp t, or nullopt before the first start.
inline std::optional<int64_t> tournament_index_at(const DomainConfig& cfg, Timestamp t) {
    if (t < cfg.tournament_start_frequency) return std::nullopt;
    return t / cfg.tournament_start_frequency;
}

}  // namespace scynet
