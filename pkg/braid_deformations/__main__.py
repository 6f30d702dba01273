from braid_deformations.verify.cli import main

raise SystemExit(main())
