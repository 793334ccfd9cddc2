#pragma once

// Fixed-supply token accounting: balances, purpose-tagged stakes, tournament
// escrow pools, and coin-age consensus power. The conservation invariant
// (balances + stakes + pools == initial supply) is checkable after every
// block via audit().

#include <map>
#include <optional>

#include "scynet/common.hpp"
#include "scynet/codec.hpp"

namespace scynet {

enum class StakePurpose : uint8_t { ConsensusBond = 0, AgentSubmission = 1, PricePublish = 2 };

struct StakeEntry {
    uint64_t id = 0;
    Amount amount = 0;
    StakePurpose purpose = StakePurpose::ConsensusBond;
    Uuid context{};  // agent id or listing id; zero for consensus bonds
    Timestamp staked_at = 0;
};

struct Account {
    Amount balance = 0;
    std::map<uint64_t, StakeEntry> stakes;
};

enum class LedgerError : uint8_t {
    InsufficientFunds,
    UnknownEntry,
    PoolUnderflow,
};

class Ledger {
public:
    Ledger() = default;

    // Genesis-only: creates funds out of nothing and grows the fixed supply.
    void genesis_credit(const Address& who, Amount amount) {
        accounts_[who].balance += amount;
        total_supply_ += amount;
    }

    Amount total_supply() const { return total_supply_; }

    Amount balance(const Address& who) const {
        auto it = accounts_.find(who);
        return it == accounts_.end() ? 0 : it->second.balance;
    }

    const std::map<Address, Account>& accounts() const { return accounts_; }
    const std::map<int64_t, Amount>& pools() const { return pools_; }

    Amount pool(int64_t k) const {
        auto it = pools_.find(k);
        return it == pools_.end() ? 0 : it->second;
    }

    std::optional<LedgerError> transfer(const Address& from, const Address& to, Amount amount) {
        auto& src = accounts_[from];
        if (src.balance < amount) return LedgerError::InsufficientFunds;
        src.balance -= amount;
        accounts_[to].balance += amount;
        return std::nullopt;
    }

    // amount > 0 enforced by callers (transaction validity); staking moves
    // balance into a tagged entry so it still counts toward supply.
    std::optional<LedgerError> stake(const Address& who, Amount amount, StakePurpose purpose,
                                     const Uuid& context, Timestamp now, uint64_t* id_out = nullptr) {
        auto& acct = accounts_[who];
        if (acct.balance < amount) return LedgerError::InsufficientFunds;
        acct.balance -= amount;
        StakeEntry entry{next_stake_id_++, amount, purpose, context, now};
        if (id_out) *id_out = entry.id;
        acct.stakes.emplace(entry.id, entry);
        return std::nullopt;
    }

    std::optional<LedgerError> release_stake(const Address& who, uint64_t entry_id) {
        auto acct = accounts_.find(who);
        if (acct == accounts_.end()) return LedgerError::UnknownEntry;
        auto it = acct->second.stakes.find(entry_id);
        if (it == acct->second.stakes.end()) return LedgerError::UnknownEntry;
        acct->second.balance += it->second.amount;
        acct->second.stakes.erase(it);
        return std::nullopt;
    }

    // Consumes a stake entry into tournament k's pool (submission fees).
    std::optional<LedgerError> consume_stake_into_pool(const Address& who, uint64_t entry_id,
                                                       int64_t k) {
        auto acct = accounts_.find(who);
        if (acct == accounts_.end()) return LedgerError::UnknownEntry;
        auto it = acct->second.stakes.find(entry_id);
        if (it == acct->second.stakes.end()) return LedgerError::UnknownEntry;
        pools_[k] += it->second.amount;
        acct->second.stakes.erase(it);
        return std::nullopt;
    }

    std::optional<LedgerError> escrow_into_pool(const Address& from, Amount amount, int64_t k) {
        auto& src = accounts_[from];
        if (src.balance < amount) return LedgerError::InsufficientFunds;
        src.balance -= amount;
        pools_[k] += amount;
        return std::nullopt;
    }

    std::optional<LedgerError> payout_from_pool(int64_t k, const Address& to, Amount amount) {
        auto it = pools_.find(k);
        if (it == pools_.end() || it->second < amount) return LedgerError::PoolUnderflow;
        it->second -= amount;
        accounts_[to].balance += amount;
        return std::nullopt;
    }

    std::optional<LedgerError> rollover_pool(int64_t from_k, int64_t to_k, Amount amount) {
        auto it = pools_.find(from_k);
        if (it == pools_.end() || it->second < amount) return LedgerError::PoolUnderflow;
        it->second -= amount;
        pools_[to_k] += amount;
        return std::nullopt;
    }

    // power = sum over consensus bonds of amount * min(age_periods, age_cap),
    // age in whole block_time periods
    uint64_t consensus_power(const Address& who, Timestamp now, Duration block_time,
                             uint64_t age_cap) const {
        auto it = accounts_.find(who);
        if (it == accounts_.end()) return 0;
        uint64_t power = 0;
        for (const auto& [id, s] : it->second.stakes) {
            if (s.purpose != StakePurpose::ConsensusBond) continue;
            if (now < s.staked_at) continue;
            uint64_t periods = uint64_t((now - s.staked_at) / block_time);
            if (periods > age_cap) periods = age_cap;
            power += s.amount * periods;
        }
        return power;
    }

    // Conservation check: balances + stake amounts + pool escrows == supply.
    bool audit() const {
        Amount sum = 0;
        for (const auto& [addr, acct] : accounts_) {
            sum += acct.balance;
            for (const auto& [id, s] : acct.stakes) sum += s.amount;
        }
        for (const auto& [k, escrowed] : pools_) sum += escrowed;
        return sum == total_supply_;
    }

    void encode(Encoder& e) const {
        e.u64(total_supply_);
        e.u64(next_stake_id_);
        e.u64(accounts_.size());
        for (const auto& [addr, acct] : accounts_) {
            e.fixed(addr);
            e.u64(acct.balance);
            e.u64(acct.stakes.size());
            for (const auto& [id, s] : acct.stakes) {
                e.u64(s.id);
                e.u64(s.amount);
                e.u64(uint64_t(s.purpose));
                e.fixed(s.context);
                e.i64(s.staked_at);
            }
        }
        e.u64(pools_.size());
        for (const auto& [k, escrowed] : pools_) {
            e.i64(k);
            e.u64(escrowed);
        }
    }

private:
    std::map<Address, Account> accounts_;
    std::map<int64_t, Amount> pools_;
    Amount total_supply_ = 0;
    uint64_t next_stake_id_ = 1;
};

}  // namespace scynet
