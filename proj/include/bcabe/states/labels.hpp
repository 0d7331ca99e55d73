#pragma once

#include <array>
#include <string_view>

#include "bcabe/tensor/types.hpp"

namespace bcabe {

enum class FamilyLabel { RhoPlus, RhoMinus, SigmaPlus, SigmaMinus };
enum class BellLabel { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array kAllFamilies{FamilyLabel::RhoPlus, FamilyLabel::RhoMinus, FamilyLabel::SigmaPlus,
                                         FamilyLabel::SigmaMinus};
inline constexpr std::array kAllBells{BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiPlus,
                                      BellLabel::PsiMinus};

/// "rho+", "rho-", "sigma+", "sigma-"
std::string_view to_string(FamilyLabel f);
/// "Phi+", "Phi-", "Psi+", "Psi-"
std::string_view to_string(BellLabel b);
/// Accepts the to_string spellings; throws std::invalid_argument otherwise.
FamilyLabel parse_family(std::string_view text);

/// rho families sit on p-strings (even zero count), sigma families on q-strings.
bool is_rho(FamilyLabel f);
/// +1 or -1: relative sign inside the GHZ superpositions.
int sign_of(FamilyLabel f);
FamilyLabel family_of(bool rho, int sign);

PureState bell_state(BellLabel b);

} // namespace bcabe
