# Normal-Play Engine
