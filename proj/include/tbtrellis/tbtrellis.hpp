#pragma once

#include "tbtrellis/code_spec.hpp"
#include "tbtrellis/decoder.hpp"
#include "tbtrellis/error_trellis.hpp"
#include "tbtrellis/export.hpp"
#include "tbtrellis/gf2.hpp"
#include "tbtrellis/scalar_parity.hpp"
#include "tbtrellis/state_machines.hpp"
#include "tbtrellis/trellis.hpp"
#include "tbtrellis/verify.hpp"
