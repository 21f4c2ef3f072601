from schnorr_qaoa.cli import main

main()
