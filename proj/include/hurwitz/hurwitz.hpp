// Convenience header pulling in the whole library.
#pragma once

#include "hurwitz/rational.hpp"
#include "hurwitz/branch_data.hpp"
#include "hurwitz/angles.hpp"
#include "hurwitz/lift.hpp"
#include "hurwitz/monodromy.hpp"
#include "hurwitz/families.hpp"
#include "hurwitz/json_io.hpp"
