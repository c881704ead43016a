#pragma once

// Umbrella header.

#include "canbase/decomp.hpp"
#include "canbase/driver.hpp"
#include "canbase/emit.hpp"
#include "canbase/errors.hpp"
#include "canbase/fixtures.hpp"
#include "canbase/flags.hpp"
#include "canbase/hecke.hpp"
#include "canbase/json_io.hpp"
#include "canbase/laurent.hpp"
#include "canbase/matrix.hpp"
#include "canbase/pairing.hpp"
#include "canbase/rational.hpp"
#include "canbase/typea.hpp"
