#pragma once

#include "hankelwalk/caps.hpp"
#include "hankelwalk/dyck.hpp"
#include "hankelwalk/error.hpp"
#include "hankelwalk/hankel.hpp"
#include "hankelwalk/lanczos.hpp"
#include "hankelwalk/lgv.hpp"
#include "hankelwalk/rational.hpp"
#include "hankelwalk/verify.hpp"
#include "hankelwalk/walk_graph.hpp"
