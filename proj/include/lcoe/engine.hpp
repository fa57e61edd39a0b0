#pragma once

// LCOE calculation kernel. Three formulations:
//
//   lcoe_generation        discounted cash-flow LCOE of a generation asset;
//                          costs and energy are both discounted by
//                          1/(1+d)^(t-1), the investment sits in year 1.
//   lcoe_storage           one-year storage LCOE over an explicit dispatch
//                          schedule and per-day prices; capital is annualized,
//                          so no discounting applies.
//   lcoe_storage_simplified closed form of lcoe_storage under the canonical
//                          full-cycle schedule and a flat price.
//
// All operations are pure functions; inputs are validated on entry so every
// failure is a named ValidationError.

#include "lcoe/core_model.hpp"

namespace lcoe {

struct ParityVerdict {
    double lcoe = 0.0;             // USD per MWh
    double reference_rate = 0.0;   // utility rate, USD per MWh
    bool at_parity = false;        // lcoe <= reference_rate
    double margin = 0.0;           // reference_rate - lcoe
};

// LCOE = (I + sum_t [F + (C_F + V) E_t] / (1+d)^(t-1)) / (sum_t E_t / (1+d)^(t-1)).
// The denominator discounts energy alongside costs; with d = 0 this reduces to
// total cost over total energy.
LcoeResult lcoe_generation(const GenerationAsset& asset);

// LCOE = (CC_P P_max + CC_E E_max + sum_t rho_t E_t_ch) / sum_t E_t_dch.
LcoeResult lcoe_storage(const StorageAsset& asset, const PriceSeries& prices,
                        const DispatchSchedule& schedule);

// Full daily cycle: charge rated_energy every day, discharge
// roundtrip_efficiency * rated_energy. Requires the power/energy link
// rated_energy = rated_power * charging_hours (checked to kLinkTolerance).
DispatchSchedule canonical_schedule(const StorageAsset& asset, int days);

// LCOE = (CC_P + CC_E T_ch + rho T_ch T) / (eta T_ch T), the closed form of
// lcoe_storage on the canonical schedule with a flat price. Breakdown fields
// are the per-MW numerator shares.
LcoeResult lcoe_storage_simplified(const StorageAsset& asset, double average_price, int days);

// Parity holds when lcoe <= utility_rate (ties count as parity).
ParityVerdict grid_parity(double lcoe, double utility_rate);

}  // namespace lcoe
