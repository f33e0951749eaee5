#pragma once

#include "kanren/audit.hpp"
#include "kanren/constraints.hpp"
#include "kanren/errors.hpp"
#include "kanren/goal.hpp"
#include "kanren/logic.hpp"
#include "kanren/run.hpp"
#include "kanren/state.hpp"
#include "kanren/std/binary.hpp"
#include "kanren/std/list.hpp"
#include "kanren/std/nat.hpp"
#include "kanren/std/pair.hpp"
#include "kanren/stlc.hpp"
#include "kanren/stream.hpp"
#include "kanren/substitution.hpp"
#include "kanren/term.hpp"
