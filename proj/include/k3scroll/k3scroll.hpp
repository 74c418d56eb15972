#pragma once

#include "k3scroll/rational.hpp"
#include "k3scroll/chow.hpp"
#include "k3scroll/proj_bundle.hpp"
#include "k3scroll/sheaf.hpp"
#include "k3scroll/brill_noether.hpp"
#include "k3scroll/scroll.hpp"
#include "k3scroll/audit.hpp"
#include "k3scroll/render.hpp"
