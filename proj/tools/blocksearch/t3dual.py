import t3search as S, t3check as K, itertools, sys
TETS=[[1,2,3,4],[5,6,7,8],[9,10,11,12],[13,14,15,16],[4,8,12,16],
      [11,7,10,17],[15,13,2,18],[14,3,1,19],[6,9,5,20],[17,18,19,20]]
pairs={}
for t,row in enumerate(TETS):
    for i,l in enumerate(row): pairs.setdefault(l,[]).append((t,i))
PL=[tuple(pairs[l]) for l in sorted(pairs)]
assert all(len(p)==2 for p in PL)
S.used=10
G=S.glue
sols=[]
def inv(p):
    q=[0]*4
    for i,v in enumerate(p): q[v]=i
    return tuple(q)
def faceok(t,i): return S.face_edges_ok(t,i)
def dfs(k,ncut):
    if k==len(PL):
        if ncut==4:
            sols.append([r[:] for r in G])
            C,r=K.analyse(sols[-1])
            print(len(sols), r['spheres'], r['npunct'], r['cusps'], r['chi'], r['deg'], bool(r['match']), flush=True)
            if r['match']: print('FOUND',sols[-1],r['match'],flush=True); return True
        return False
    (t,i),(u,j)=PL[k]
    opts=[p for p in S.ODD if p[i]==j]
    for p in opts:
        saved=dict(S.partner)
        G[t][i]=(u,p); G[u][j]=(t,inv(p))
        if faceok(t,i) and faceok(u,j) and dfs(k+1,ncut): return True
        G[t][i]=None; G[u][j]=None; S.partner=saved
    if ncut<4:
        saved=dict(S.partner)
        G[t][i]='B'; G[u][j]='B'; S.nb+=2
        if faceok(t,i) and faceok(u,j) and dfs(k+1,ncut+1): return True
        G[t][i]=None; G[u][j]=None; S.nb-=2; S.partner=saved
    return False
print(dfs(0,0))
